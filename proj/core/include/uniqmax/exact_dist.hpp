#pragma once

#include <cstddef>
#include <optional>

#include "uniqmax/lattice_pmf.hpp"
#include "uniqmax/payoff_model.hpp"

namespace uniqmax {

struct PmfOptions {
    Mode mode = Mode::exact;
    /// Largest admissible support length k * n_games + 1.
    std::size_t support_cap = 10'000'000;
    unsigned threads = 1;
};

/// A probability or expectation; `exact` is set when computed in exact mode.
struct Quantity {
    std::optional<Rational> exact;
    double value = 0.0;
};

/// Distribution of the sum of `n_games` independent payoffs, by binary
/// exponentiation of the single-game PMF with direct convolution.
/// Throws ResourceError when the support would exceed `support_cap`.
LatticePmf score_pmf(const PayoffModel& model, int n_games, const PmfOptions& options = {});

/// P(Y > y_threshold), strict.
Quantity tail_prob(const LatticePmf& pmf, double y_threshold);

struct Threshold {
    int n = 0;
    double epsilon = 1.0;
    double x_n = 0.0;
    double t_n = 0.0;          // score units
    double t_n_lattice = 0.0;  // k * t_n, Y-units
};

/// t_n = (n-1)mu + x_n sqrt(n-1) sigma with
/// x_n^2 = 2 log(n-1) - (1+eps) log log(n-1).
/// Throws DomainError for n <= 2, eps <= 0, or a negative radicand.
Threshold threshold(const PayoffModel& model, int n, double epsilon = 1.0);

/// Exact E[W_n(t)] by conditioning on the payoff of the game shared by a
/// pair: C(n,2) * sum_a P(a) sum_{h > t} P'(h - a) P'(h - (k - a)), where P' is
/// the (n-2)-game score PMF.
Quantity expected_wn_exact(const PayoffModel& model, int n, double y_threshold, const PmfOptions& options = {});
Quantity expected_wn_exact(const PayoffModel& model, int n, const Threshold& t, const PmfOptions& options = {});

/// C(n,2) * sum_{h > y_threshold} P'(h)^2 with P' the (n-2)-game score PMF.
Quantity collision_bound(const PayoffModel& model, int n, double y_threshold, const PmfOptions& options = {});

/// RHS_n: collision_bound over the window h > k (t_{n-1} - 1). Needs n >= 4.
Quantity expected_wn_upper(const PayoffModel& model, int n, double epsilon = 1.0, const PmfOptions& options = {});

/// 1 - (1 - p)^n for p = P(s_1(n) > t_n); a lower bound on P(max score > t_n).
Quantity prop1_lower_bound(const PayoffModel& model, int n, double epsilon = 1.0, const PmfOptions& options = {});

/// 1 - (1 - p)^n, exact when p is.
Quantity complement_power(const Quantity& p, int n);

}  // namespace uniqmax
