#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "uniqmax/lattice_pmf.hpp"
#include "uniqmax/payoff_model.hpp"

namespace uniqmax {

struct EnumerationOptions {
    /// Largest admissible (k+1)^(n(n-1)/2).
    std::uint64_t max_outcomes = 100'000'000;
    /// Outcome indices are split into this many contiguous blocks; merged
    /// results do not depend on it.
    unsigned threads = 1;
};

/// One outcome as seen by a visitor. Probability is weight / denominator;
/// the denominator is shared by every outcome of the enumeration.
struct OutcomeView {
    int n;
    int k;
    std::uint64_t index;
    std::span<const int> games;
    std::span<const int> y_scores;
    const Integer& weight;
    const Integer& denominator;

    Rational probability() const;
};

using OutcomeVisitor = std::function<void(const OutcomeView&)>;

/// (k+1)^(n(n-1)/2).
Integer outcome_count(const PayoffModel& model, int n);

/// Returns the outcome count, or throws FeasibilityError naming it.
std::uint64_t check_feasible(const PayoffModel& model, int n, const EnumerationOptions& options = {});

/// Visits every outcome once, in mixed-radix lexicographic order over the
/// canonical game list (the first game is the most significant digit).
void enumerate_outcomes(const PayoffModel& model, int n, const OutcomeVisitor& visitor,
                        const EnumerationOptions& options = {});

/// Visits outcomes with index in [first, last) in the same order.
void enumerate_outcome_range(const PayoffModel& model, int n, std::uint64_t first, std::uint64_t last,
                             const OutcomeVisitor& visitor);

struct UniqueMaxReport {
    int n = 0;
    Rational r_n;
    Rational p_tie_at_max;
};

/// Probability that exactly one player attains the maximum score. r_1 = 1.
UniqueMaxReport exact_unique_max(const PayoffModel& model, int n, const EnumerationOptions& options = {});

struct CensusEntry {
    Rational probability;
    Integer count;
};

/// Sorted (nondecreasing) Y-score vectors with their probability and the
/// number of outcomes producing them.
struct CensusTable {
    int n = 0;
    int k = 1;
    std::map<std::vector<int>, CensusEntry> entries;
};

CensusTable score_census(const PayoffModel& model, int n, const EnumerationOptions& options = {});

struct NdRow {
    long long x = 0;
    Rational lhs;  // P(every score <= x)
    Rational rhs;  // P(s_1 <= x)^n
};

struct NdReport {
    int n = 0;
    int k = 1;
    std::vector<NdRow> rows;  // x = 0 .. k(n-1)
    Rational max_lhs_minus_rhs;

    bool holds() const { return sgn(max_lhs_minus_rhs) <= 0; }
    /// Row for any integer x; below the support both sides are 0, above it 1.
    NdRow at(long long x) const;
};

/// Checks P(all scores <= x) <= prod_i P(s_i <= x) at every lattice x.
NdReport nd_inequality_check(const PayoffModel& model, int n, const EnumerationOptions& options = {});

/// Exact distribution of W_n(t), keyed by the number of tied pairs.
std::map<int, Rational> wn_distribution_exact(const PayoffModel& model, int n, double y_threshold,
                                              const EnumerationOptions& options = {});

/// Marginal PMF of one player's score reconstructed by enumeration.
LatticePmf enumerated_marginal(const PayoffModel& model, int n, int player, const EnumerationOptions& options = {});

}  // namespace uniqmax
