#include "uniqmax/payoff_model.hpp"

#include <cmath>

#include "uniqmax/errors.hpp"

namespace uniqmax {

std::optional<Violation> validate(int k, std::span<const Rational> probs) {
    if (k < 1) {
        return Violation{ViolationKind::shape, 0, "k must be a positive integer, got " + std::to_string(k)};
    }
    if (probs.size() != static_cast<std::size_t>(k) + 1) {
        return Violation{ViolationKind::shape, 0,
                         "expected " + std::to_string(k + 1) + " probabilities for k=" + std::to_string(k) +
                             ", got " + std::to_string(probs.size())};
    }
    for (std::size_t a = 0; a < probs.size(); ++a) {
        if (sgn(probs[a]) <= 0) {
            return Violation{ViolationKind::positivity, a,
                             "probs[" + std::to_string(a) + "] = " + to_fraction_string(probs[a]) +
                                 " is not strictly positive"};
        }
    }
    Rational total = 0;
    for (const auto& p : probs) {
        total += p;
    }
    if (total != 1) {
        return Violation{ViolationKind::normalization, 0,
                         "probabilities sum to " + to_fraction_string(total) + ", not 1"};
    }
    for (std::size_t a = 0; a < probs.size(); ++a) {
        std::size_t mirror = probs.size() - 1 - a;
        if (probs[a] != probs[mirror]) {
            return Violation{ViolationKind::symmetry, a,
                             "asymmetric: probs[" + std::to_string(a) + "] = " + to_fraction_string(probs[a]) +
                                 " but probs[" + std::to_string(mirror) + "] = " +
                                 to_fraction_string(probs[mirror])};
        }
    }
    return std::nullopt;
}

PayoffModel PayoffModel::create(int k, std::vector<Rational> probs, std::string label) {
    for (auto& p : probs) {
        p.canonicalize();
    }
    if (auto violation = validate(k, probs)) {
        throw ModelError(violation->message);
    }
    PayoffModel model;
    model.k_ = k;
    model.denominator_ = 1;
    for (const auto& p : probs) {
        mpz_lcm(model.denominator_.get_mpz_t(), model.denominator_.get_mpz_t(), p.get_den().get_mpz_t());
    }
    for (const auto& p : probs) {
        model.numerators_.emplace_back(p.get_num() * (model.denominator_ / p.get_den()));
        model.probs_f64_.push_back(to_double(p));
    }
    model.probs_ = std::move(probs);
    if (label.empty()) {
        label = "k=" + std::to_string(k) + ";probs=";
        for (std::size_t a = 0; a < model.probs_.size(); ++a) {
            label += (a ? "," : "") + to_fraction_string(model.probs_[a]);
        }
    }
    model.label_ = std::move(label);
    return model;
}

Moments PayoffModel::moments() const {
    Moments m;
    Rational second = 0;
    for (int a = 0; a <= k_; ++a) {
        Rational x(a, k_);
        x.canonicalize();
        m.mu += x * probs_[a];
        second += x * x * probs_[a];
    }
    m.sigma_sq = second - m.mu * m.mu;
    m.sigma = std::sqrt(to_double(m.sigma_sq));
    return m;
}

PayoffModel make_classic() {
    return PayoffModel::create(1, {Rational(1, 2), Rational(1, 2)}, "classic");
}

PayoffModel make_chess(const Rational& p_draw) {
    if (sgn(p_draw) <= 0 || p_draw >= 1) {
        throw ModelError("chess model needs 0 < p_draw < 1, got " + to_fraction_string(p_draw));
    }
    Rational side = (1 - p_draw) / 2;
    return PayoffModel::create(2, {side, p_draw, side}, "chess:" + to_fraction_string(p_draw));
}

PayoffModel make_uniform(int k) {
    if (k < 1) {
        throw ModelError("uniform model needs k >= 1, got " + std::to_string(k));
    }
    return PayoffModel::create(k, std::vector<Rational>(k + 1, Rational(1, k + 1)), "uniform:" + std::to_string(k));
}

}  // namespace uniqmax
