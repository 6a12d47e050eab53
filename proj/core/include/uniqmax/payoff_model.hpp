#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uniqmax/rational.hpp"

namespace uniqmax {

struct Moments {
    Rational mu;        // mean payoff, score units
    Rational sigma_sq;  // payoff variance, score units
    double sigma = 0.0;
};

/// Which PayoffModel invariant a probability vector breaks first.
enum class ViolationKind { shape, positivity, normalization, symmetry };

struct Violation {
    ViolationKind kind;
    std::size_t index = 0;  // offending entry, where one exists
    std::string message;
};

/// Checks k >= 1, k+1 entries, strict positivity, exact normalization and
/// probs[a] == probs[k-a], in that order. Returns the first violation found.
std::optional<Violation> validate(int k, std::span<const Rational> probs);

/// Payoff distribution of one game under model M_k. The payoff to the first
/// player is a/k with probability probs[a]; the opponent receives (k-a)/k.
///
/// Instances always satisfy the M_k constraints; construction goes through
/// `create` which validates.
class PayoffModel {
   public:
    static PayoffModel create(int k, std::vector<Rational> probs, std::string label = {});

    int k() const { return k_; }
    std::span<const Rational> probs() const { return probs_; }
    std::span<const double> probs_f64() const { return probs_f64_; }

    /// probs[a] == numerators()[a] / denominator(), with denominator the lcm of
    /// the entries' denominators.
    std::span<const Integer> numerators() const { return numerators_; }
    const Integer& denominator() const { return denominator_; }

    Moments moments() const;

    /// Short identifier used in output metadata ("classic", "chess:1/2", ...).
    const std::string& label() const { return label_; }

   private:
    PayoffModel() = default;

    int k_ = 0;
    std::vector<Rational> probs_;
    std::vector<double> probs_f64_;
    std::vector<Integer> numerators_;
    Integer denominator_;
    std::string label_;
};

/// M_1: win or loss with probability 1/2 each.
PayoffModel make_classic();

/// M_2: draw with probability p_draw, win and loss (1 - p_draw)/2 each.
/// Throws ModelError unless 0 < p_draw < 1.
PayoffModel make_chess(const Rational& p_draw);

/// M_k with every payoff value equally likely.
PayoffModel make_uniform(int k);

}  // namespace uniqmax
