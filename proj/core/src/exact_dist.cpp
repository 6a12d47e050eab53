#include "uniqmax/exact_dist.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "uniqmax/errors.hpp"
#include "uniqmax/parallel.hpp"

namespace uniqmax {

namespace {

// Output cells are independent; within a cell the products are accumulated in
// ascending index order, so the binary64 result does not depend on `threads`.
std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b, unsigned threads) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    std::size_t la = a.size();
    std::size_t lb = b.size();
    parallel_blocks(out.size(), threads, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            std::size_t lo = i >= lb - 1 ? i - (lb - 1) : 0;
            std::size_t hi = std::min(i, la - 1);
            double acc = 0.0;
            for (std::size_t j = lo; j <= hi; ++j) {
                acc += a[j] * b[i - j];
            }
            out[i] = acc;
        }
    });
    return out;
}

std::vector<Integer> convolve(const std::vector<Integer>& a, const std::vector<Integer>& b, unsigned threads) {
    std::vector<Integer> out(a.size() + b.size() - 1);
    std::size_t la = a.size();
    std::size_t lb = b.size();
    parallel_blocks(out.size(), threads, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            std::size_t lo = i >= lb - 1 ? i - (lb - 1) : 0;
            std::size_t hi = std::min(i, la - 1);
            mpz_ptr acc = out[i].get_mpz_t();
            for (std::size_t j = lo; j <= hi; ++j) {
                mpz_addmul(acc, a[j].get_mpz_t(), b[i - j].get_mpz_t());
            }
        }
    });
    return out;
}

double renormalize(std::vector<double>& masses) {
    double total = 0.0;
    for (double m : masses) {
        total += m;
    }
    for (double& m : masses) {
        m /= total;
    }
    return std::abs(total - 1.0);
}

template <class T>
std::vector<T> power(const std::vector<T>& base_in, int exponent, unsigned threads, double* drift) {
    std::vector<T> result{T(1)};
    std::vector<T> base = base_in;
    while (exponent > 0) {
        if (exponent & 1) {
            result = convolve(result, base, threads);
            if constexpr (std::is_same_v<T, double>) {
                *drift += renormalize(result);
            }
        }
        exponent >>= 1;
        if (exponent > 0) {
            base = convolve(base, base, threads);
            if constexpr (std::is_same_v<T, double>) {
                *drift += renormalize(base);
            }
        }
    }
    return result;
}

Integer pow_integer(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

long pair_count(int n) {
    return static_cast<long>(n) * (n - 1) / 2;
}

Quantity from_rational(Rational r) {
    r.canonicalize();
    Quantity q;
    q.value = to_double(r);
    q.exact = std::move(r);
    return q;
}

}  // namespace

LatticePmf score_pmf(const PayoffModel& model, int n_games, const PmfOptions& options) {
    if (n_games < 0) {
        throw DomainError("n_games must be nonnegative, got " + std::to_string(n_games));
    }
    const int k = model.k();
    std::size_t support = static_cast<std::size_t>(k) * static_cast<std::size_t>(n_games) + 1;
    if (support > options.support_cap) {
        throw ResourceError("PMF support of " + std::to_string(support) + " points exceeds cap " +
                            std::to_string(options.support_cap));
    }
    if (options.mode == Mode::exact) {
        std::vector<Integer> base(model.numerators().begin(), model.numerators().end());
        auto numerators = power(base, n_games, options.threads, nullptr);
        return LatticePmf::exact(k, n_games, std::move(numerators),
                                 pow_integer(model.denominator(), static_cast<unsigned long>(n_games)));
    }
    std::vector<double> base(model.probs_f64().begin(), model.probs_f64().end());
    double drift = 0.0;
    auto masses = power(base, n_games, options.threads, &drift);
    return LatticePmf::binary64(k, n_games, std::move(masses), drift);
}

Quantity tail_prob(const LatticePmf& pmf, double y_threshold) {
    const long long top = pmf.max_y();
    const long long start = first_above(y_threshold, top);
    if (pmf.mode() == Mode::exact) {
        Integer sum = 0;
        for (long long y = top; y >= start; --y) {
            sum += pmf.numerators()[static_cast<std::size_t>(y)];
        }
        return from_rational(Rational(sum, pmf.denominator()));
    }
    // Smallest masses first.
    double sum = 0.0;
    for (long long y = top; y >= start; --y) {
        sum += pmf.masses()[static_cast<std::size_t>(y)];
    }
    return Quantity{std::nullopt, sum};
}

Threshold threshold(const PayoffModel& model, int n, double epsilon) {
    if (n <= 2) {
        throw DomainError("threshold needs n >= 3 so that log log(n-1) is defined, got n=" + std::to_string(n));
    }
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw DomainError("epsilon must be a positive finite number");
    }
    const double log_n = std::log(static_cast<double>(n - 1));
    const double radicand = 2.0 * log_n - (1.0 + epsilon) * std::log(log_n);
    if (radicand < 0.0) {
        throw DomainError("threshold radicand 2log(n-1) - (1+eps)loglog(n-1) = " + std::to_string(radicand) +
                          " is negative for n=" + std::to_string(n) + ", eps=" + std::to_string(epsilon));
    }
    const Moments m = model.moments();
    Threshold t;
    t.n = n;
    t.epsilon = epsilon;
    t.x_n = std::sqrt(radicand);
    t.t_n = (n - 1) * to_double(m.mu) + t.x_n * std::sqrt(static_cast<double>(n - 1)) * m.sigma;
    t.t_n_lattice = model.k() * t.t_n;
    return t;
}

Quantity expected_wn_exact(const PayoffModel& model, int n, double y_threshold, const PmfOptions& options) {
    if (n < 2) {
        throw DomainError("E[W_n] needs n >= 2, got n=" + std::to_string(n));
    }
    const int k = model.k();
    const LatticePmf rest = score_pmf(model, n - 2, options);
    const long long top = static_cast<long long>(k) * (n - 1);
    const long long start = first_above(y_threshold, top);

    if (options.mode == Mode::exact) {
        auto num = [&](long long y) -> const Integer* {
            static const Integer zero = 0;
            return (y < 0 || y > rest.max_y()) ? &zero : &rest.numerators()[static_cast<std::size_t>(y)];
        };
        Integer total = 0;
        Integer inner;
        for (int a = 0; a <= k; ++a) {
            inner = 0;
            for (long long h = start; h <= top; ++h) {
                mpz_addmul(inner.get_mpz_t(), num(h - a)->get_mpz_t(), num(h - (k - a))->get_mpz_t());
            }
            total += model.numerators()[a] * inner;
        }
        Integer den = model.denominator() * rest.denominator() * rest.denominator();
        return from_rational(Rational(total * pair_count(n), den));
    }
    double total = 0.0;
    for (int a = 0; a <= k; ++a) {
        double inner = 0.0;
        for (long long h = start; h <= top; ++h) {
            inner += rest.mass(h - a) * rest.mass(h - (k - a));
        }
        total += model.probs_f64()[a] * inner;
    }
    return Quantity{std::nullopt, static_cast<double>(pair_count(n)) * total};
}

Quantity expected_wn_exact(const PayoffModel& model, int n, const Threshold& t, const PmfOptions& options) {
    if (t.n != n) {
        throw DomainError("threshold was computed for n=" + std::to_string(t.n) + ", not n=" + std::to_string(n));
    }
    return expected_wn_exact(model, n, t.t_n_lattice, options);
}

Quantity collision_bound(const PayoffModel& model, int n, double y_threshold, const PmfOptions& options) {
    if (n < 2) {
        throw DomainError("collision bound needs n >= 2, got n=" + std::to_string(n));
    }
    const LatticePmf rest = score_pmf(model, n - 2, options);
    const long long top = rest.max_y();
    const long long start = first_above(y_threshold, top);
    if (options.mode == Mode::exact) {
        Integer total = 0;
        for (long long h = top; h >= start; --h) {
            const Integer& p = rest.numerators()[static_cast<std::size_t>(h)];
            mpz_addmul(total.get_mpz_t(), p.get_mpz_t(), p.get_mpz_t());
        }
        return from_rational(Rational(total * pair_count(n), rest.denominator() * rest.denominator()));
    }
    double total = 0.0;
    for (long long h = top; h >= start; --h) {
        double p = rest.masses()[static_cast<std::size_t>(h)];
        total += p * p;
    }
    return Quantity{std::nullopt, static_cast<double>(pair_count(n)) * total};
}

Quantity expected_wn_upper(const PayoffModel& model, int n, double epsilon, const PmfOptions& options) {
    if (n < 4) {
        throw DomainError("RHS_n needs n >= 4 so that t_{n-1} is defined, got n=" + std::to_string(n));
    }
    const Threshold prev = threshold(model, n - 1, epsilon);
    return collision_bound(model, n, model.k() * (prev.t_n - 1.0), options);
}

Quantity complement_power(const Quantity& p, int n) {
    if (p.exact) {
        Rational q = 1 - *p.exact;
        Rational qn(pow_integer(q.get_num(), static_cast<unsigned long>(n)),
                    pow_integer(q.get_den(), static_cast<unsigned long>(n)));
        return from_rational(1 - qn);
    }
    return Quantity{std::nullopt, -std::expm1(n * std::log1p(-p.value))};
}

Quantity prop1_lower_bound(const PayoffModel& model, int n, double epsilon, const PmfOptions& options) {
    const Threshold t = threshold(model, n, epsilon);
    const LatticePmf single = score_pmf(model, n - 1, options);
    return complement_power(tail_prob(single, t.t_n_lattice), n);
}

}  // namespace uniqmax
