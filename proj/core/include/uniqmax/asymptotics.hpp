#pragma once

#include <string>
#include <vector>

#include "uniqmax/exact_dist.hpp"
#include "uniqmax/payoff_model.hpp"

namespace uniqmax {

double std_normal_pdf(double x);
double std_normal_cdf(double x);
/// 1 - Phi(x), computed directly so it keeps relative accuracy for large x.
double std_normal_sf(double x);

/// Exact-vs-asymptotic comparison over a grid of n.
struct RatioDiagnostic {
    std::string quantity;
    std::vector<int> n_grid;
    std::vector<double> exact_values;
    std::vector<double> asymptotic_values;
    std::vector<double> ratios;  // exact / asymptotic
};

/// (log(n-1))^{eps/2} / (sqrt(4 pi) (n-1)), the asymptotic form of
/// P(s_1(n) > t_n). DomainError for n <= 2.
double tail_asymptotic(int n, double epsilon);

/// P(s_1(n) > t_n) from the (n-1)-game binary64 PMF against tail_asymptotic.
RatioDiagnostic tail_ratio(const PayoffModel& model, const std::vector<int>& n_grid, double epsilon);

/// Gaussian approximation to P(Y = y) for the sum of `n_games` payoffs:
/// phi(z) / (k sigma sqrt(n_games)), z = (y/k - n_games mu) / (sigma sqrt(n_games)).
double llt_gaussian(const PayoffModel& model, int n_games, long long y);

struct LltError {
    int n_games = 0;
    double sup_error = 0.0;         // sup_y |k sigma sqrt(m) P(Y=y) - phi(z)|
    double scaled_sup_error = 0.0;  // sup_error * sqrt(m)
};

LltError llt_sup_error(const PayoffModel& model, int n_games);

struct Claim2Row {
    int n = 0;
    double x = 0.0;
    long long y_x = 0;   // ceil(k((n-2)mu + x sqrt(n-2) sigma))
    double p_x = 0.0;    // P(s_u(n-1) = y_x / k)
    long long y_x1 = 0;  // same at x + 1
    double p_x1 = 0.0;
    double gaussian_x = 0.0;
    double gaussian_x1 = 0.0;
    bool violation = false;  // p_x < p_x1
};

struct Claim2Report {
    std::vector<Claim2Row> rows;
    std::size_t violations = 0;
};

/// Evaluates P_n(x) >= P_n(x+1) on the (n-2)-game PMF for every x in the grid.
/// DomainError for n < 3 or a non-positive x.
Claim2Report claim2_check(const PayoffModel& model, int n, const std::vector<double>& x_grid);

/// (1 / (sigma sqrt(n-2))) (log(n-2))^{eps/2} / (sqrt(2 pi) (n-2)). DomainError for n <= 3.
double claim3_asymptotic(const PayoffModel& model, int n, double epsilon);

/// P(s_1(n-1) = ceil(t_{n-1} - 1)) on the Y-lattice, (n-2)-game PMF.
double claim3_exact(const PayoffModel& model, int n, double epsilon);

RatioDiagnostic claim3_ratio(const PayoffModel& model, const std::vector<int>& n_grid, double epsilon);

/// Asymptotic form of RHS_n:
/// C(n,2) * claim3_asymptotic * (log(n-2))^{eps/2} / (sqrt(4 pi) (n-2)).
double rhs_asymptotic(const PayoffModel& model, int n, double epsilon);

/// Binary64 RHS_n against rhs_asymptotic.
RatioDiagnostic rhs_ratio(const PayoffModel& model, const std::vector<int>& n_grid, double epsilon);

/// x_n / (n-1)^{1/6}; the tail asymptotics need this to vanish.
double feller_condition_ratio(const PayoffModel& model, int n, double epsilon);

}  // namespace uniqmax
