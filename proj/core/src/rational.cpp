#include "uniqmax/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "uniqmax/errors.hpp"

namespace uniqmax {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw ModelError("malformed number '" + std::string(whole) + "'");
    }
    Integer v(std::string(s), 10);
    return negative ? Integer(-v) : v;
}

Rational parse_decimal(std::string_view text) {
    std::string_view s = text;
    int exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        Integer ex = parse_integer(s.substr(e + 1), text);
        if (!ex.fits_sint_p() || std::abs(ex.get_si()) > 4096) {
            throw ModelError("exponent out of range in '" + std::string(text) + "'");
        }
        exponent = static_cast<int>(ex.get_si());
        s = s.substr(0, e);
    }
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string digits;
    auto dot = s.find('.');
    if (dot == std::string_view::npos) {
        digits = std::string(s);
    } else {
        digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
        exponent -= static_cast<int>(s.size() - dot - 1);
        if (s.find('.', dot + 1) != std::string_view::npos) {
            throw ModelError("malformed number '" + std::string(text) + "'");
        }
    }
    if (!all_digits(digits)) {
        throw ModelError("malformed number '" + std::string(text) + "'");
    }
    Rational r{Integer(digits, 10)};
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exponent)));
    if (exponent >= 0) {
        r *= scale;
    } else {
        r /= scale;
    }
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw ModelError("empty number");
    }
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash), text);
        Integer den = parse_integer(text.substr(slash + 1), text);
        if (den == 0) {
            throw ModelError("zero denominator in '" + std::string(text) + "'");
        }
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    return parse_decimal(text);
}

std::string to_fraction_string(const Rational& value) {
    Rational r = value;
    r.canonicalize();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double to_double(const Rational& value) {
    return value.get_d();
}

bool exceeds(long long lattice_point, double threshold) {
    // Lattice points stay far below 2^53, so the conversion is exact.
    return static_cast<double>(lattice_point) > threshold;
}

long long first_above(double threshold, long long limit) {
    if (std::isnan(threshold)) {
        throw DomainError("threshold is NaN");
    }
    if (threshold < 0.0) {
        return 0;
    }
    // Every lattice point up to `limit` is exactly representable here.
    if (threshold >= static_cast<double>(limit)) {
        return limit + 1;
    }
    return static_cast<long long>(std::floor(threshold)) + 1;
}

}  // namespace uniqmax
