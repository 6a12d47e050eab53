#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace uniqmax {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "num/den", an integer, or a finite decimal ("0.25", "1e-3") into an
/// exact canonical rational. Throws ModelError on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form; integers are written as "num/1".
std::string to_fraction_string(const Rational& value);

/// Nearest binary64 value (GMP truncates toward zero, which is within one ulp).
double to_double(const Rational& value);

/// Exact comparison of an integer lattice point against a binary64 threshold.
bool exceeds(long long lattice_point, double threshold);

/// First lattice point strictly above `threshold`, clamped to [0, limit + 1].
long long first_above(double threshold, long long limit);

}  // namespace uniqmax
