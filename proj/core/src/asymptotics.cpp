#include "uniqmax/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "uniqmax/errors.hpp"

namespace uniqmax {

namespace {

void push(RatioDiagnostic& d, int n, double exact, double asymptotic) {
    d.n_grid.push_back(n);
    d.exact_values.push_back(exact);
    d.asymptotic_values.push_back(asymptotic);
    d.ratios.push_back(exact / asymptotic);
}

PmfOptions float_mode() {
    PmfOptions options;
    options.mode = Mode::binary64;
    return options;
}

}  // namespace

double std_normal_pdf(double x) {
    return std::exp(-0.5 * x * x) * (0.5 * std::numbers::inv_sqrtpi * std::numbers::sqrt2);
}

double std_normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double std_normal_sf(double x) {
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double tail_asymptotic(int n, double epsilon) {
    if (n <= 2) {
        throw DomainError("tail asymptotic needs n >= 3, got n=" + std::to_string(n));
    }
    const double m = n - 1;
    return std::pow(std::log(m), epsilon / 2.0) / (std::sqrt(4.0 * std::numbers::pi) * m);
}

RatioDiagnostic tail_ratio(const PayoffModel& model, const std::vector<int>& n_grid, double epsilon) {
    RatioDiagnostic d;
    d.quantity = "tail";
    for (int n : n_grid) {
        const Threshold t = threshold(model, n, epsilon);
        const double exact = tail_prob(score_pmf(model, n - 1, float_mode()), t.t_n_lattice).value;
        push(d, n, exact, tail_asymptotic(n, epsilon));
    }
    return d;
}

double llt_gaussian(const PayoffModel& model, int n_games, long long y) {
    if (n_games < 1) {
        throw DomainError("local limit approximation needs n_games >= 1");
    }
    const Moments m = model.moments();
    const double k = model.k();
    const double spread = m.sigma * std::sqrt(static_cast<double>(n_games));
    const double z = (static_cast<double>(y) / k - n_games * to_double(m.mu)) / spread;
    return std_normal_pdf(z) / (k * spread);
}

LltError llt_sup_error(const PayoffModel& model, int n_games) {
    if (n_games < 1) {
        throw DomainError("local limit comparison needs n_games >= 1");
    }
    const LatticePmf pmf = score_pmf(model, n_games, float_mode());
    const Moments m = model.moments();
    const double k = model.k();
    const double spread = m.sigma * std::sqrt(static_cast<double>(n_games));
    const double mean = n_games * to_double(m.mu);
    LltError e;
    e.n_games = n_games;
    for (long long y = 0; y <= pmf.max_y(); ++y) {
        const double z = (static_cast<double>(y) / k - mean) / spread;
        e.sup_error = std::max(e.sup_error, std::abs(k * spread * pmf.mass(y) - std_normal_pdf(z)));
    }
    e.scaled_sup_error = e.sup_error * std::sqrt(static_cast<double>(n_games));
    return e;
}

Claim2Report claim2_check(const PayoffModel& model, int n, const std::vector<double>& x_grid) {
    if (n < 3) {
        throw DomainError("monotonicity check needs n >= 3, got n=" + std::to_string(n));
    }
    const int games = n - 2;
    const LatticePmf pmf = score_pmf(model, games, float_mode());
    const Moments m = model.moments();
    const double k = model.k();
    const double root = std::sqrt(static_cast<double>(games));
    auto lattice_point = [&](double x) {
        return static_cast<long long>(std::ceil(k * (games * to_double(m.mu) + x * root * m.sigma)));
    };
    Claim2Report report;
    for (double x : x_grid) {
        if (!(x > 0.0)) {
            throw DomainError("x grid points must be positive");
        }
        Claim2Row row;
        row.n = n;
        row.x = x;
        row.y_x = lattice_point(x);
        row.y_x1 = lattice_point(x + 1.0);
        row.p_x = pmf.mass(row.y_x);
        row.p_x1 = pmf.mass(row.y_x1);
        row.gaussian_x = llt_gaussian(model, games, row.y_x);
        row.gaussian_x1 = llt_gaussian(model, games, row.y_x1);
        row.violation = row.p_x < row.p_x1;
        report.violations += row.violation ? 1 : 0;
        report.rows.push_back(row);
    }
    return report;
}

double claim3_asymptotic(const PayoffModel& model, int n, double epsilon) {
    if (n <= 3) {
        throw DomainError("point-probability asymptotic needs n >= 4, got n=" + std::to_string(n));
    }
    const double m = n - 2;
    const double sigma = model.moments().sigma;
    return std::pow(std::log(m), epsilon / 2.0) / (sigma * std::sqrt(m) * std::sqrt(2.0 * std::numbers::pi) * m);
}

double claim3_exact(const PayoffModel& model, int n, double epsilon) {
    if (n <= 3) {
        throw DomainError("point-probability check needs n >= 4, got n=" + std::to_string(n));
    }
    const Threshold prev = threshold(model, n - 1, epsilon);
    const auto y = static_cast<long long>(std::ceil(model.k() * (prev.t_n - 1.0)));
    return score_pmf(model, n - 2, float_mode()).mass(y);
}

RatioDiagnostic claim3_ratio(const PayoffModel& model, const std::vector<int>& n_grid, double epsilon) {
    RatioDiagnostic d;
    d.quantity = "claim3";
    for (int n : n_grid) {
        push(d, n, claim3_exact(model, n, epsilon), claim3_asymptotic(model, n, epsilon));
    }
    return d;
}

double rhs_asymptotic(const PayoffModel& model, int n, double epsilon) {
    const double point = claim3_asymptotic(model, n, epsilon);
    const double m = n - 2;
    const double tail = std::pow(std::log(m), epsilon / 2.0) / (std::sqrt(4.0 * std::numbers::pi) * m);
    return 0.5 * n * (n - 1.0) * point * tail;
}

RatioDiagnostic rhs_ratio(const PayoffModel& model, const std::vector<int>& n_grid, double epsilon) {
    RatioDiagnostic d;
    d.quantity = "rhs";
    for (int n : n_grid) {
        push(d, n, expected_wn_upper(model, n, epsilon, float_mode()).value, rhs_asymptotic(model, n, epsilon));
    }
    return d;
}

double feller_condition_ratio(const PayoffModel& model, int n, double epsilon) {
    const Threshold t = threshold(model, n, epsilon);
    return t.x_n / std::cbrt(std::sqrt(static_cast<double>(n - 1)));
}

}  // namespace uniqmax
