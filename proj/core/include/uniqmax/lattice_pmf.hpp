#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "uniqmax/rational.hpp"

namespace uniqmax {

enum class Mode { exact, binary64 };

const char* to_string(Mode mode);

/// Probability mass function of a score, in Y-units, on {0, ..., k*n_games}.
///
/// Exact mode stores integer numerators over one shared denominator; binary64
/// mode stores doubles. Both accessors work in either mode (exact_mass throws
/// in binary64 mode).
class LatticePmf {
   public:
    static LatticePmf exact(int k, int n_games, std::vector<Integer> numerators, Integer denominator);
    static LatticePmf binary64(int k, int n_games, std::vector<double> masses, double drift);

    int k() const { return k_; }
    int n_games() const { return n_games_; }
    Mode mode() const { return mode_; }

    /// k * n_games + 1.
    std::size_t size() const;
    long long max_y() const { return static_cast<long long>(size()) - 1; }

    /// Zero outside the support.
    double mass(long long y) const;
    Rational exact_mass(long long y) const;

    std::span<const Integer> numerators() const { return numerators_; }
    const Integer& denominator() const { return denominator_; }
    std::span<const double> masses() const { return masses_; }

    /// Sum of |total - 1| over every renormalization in binary64 mode.
    double drift() const { return drift_; }
    bool quality_warning() const { return drift_ > 1e-9; }

   private:
    LatticePmf() = default;

    int k_ = 1;
    int n_games_ = 0;
    Mode mode_ = Mode::exact;
    std::vector<Integer> numerators_;
    Integer denominator_;
    std::vector<double> masses_;
    double drift_ = 0.0;
};

}  // namespace uniqmax
