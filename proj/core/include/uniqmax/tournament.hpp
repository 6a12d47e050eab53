#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "uniqmax/payoff_model.hpp"

namespace uniqmax {

/// Number of games in a round robin among n players, n(n-1)/2.
constexpr std::size_t game_count(int n) {
    return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

/// One payoff index per unordered pair (i<j), pairs in lexicographic order
/// (0,1), (0,2), ..., (0,n-1), (1,2), ... Player i receives games[g]/k and
/// player j receives (k - games[g])/k.
struct TournamentOutcome {
    int n = 0;
    int k = 1;
    std::vector<int> games;
};

/// Scores in Y-units (Y = k * score); sums to k * n(n-1)/2.
struct ScoreVector {
    std::vector<int> y_scores;
};

/// Throws ModelError if the outcome has the wrong game count or an index
/// outside {0..k}.
void check_outcome(const TournamentOutcome& outcome);

ScoreVector score_vector(const TournamentOutcome& outcome);

/// True when exactly one player attains the maximum score.
bool has_unique_max(std::span<const int> y_scores);

/// W(t): number of unordered pairs tied at a common Y-score strictly above
/// `y_threshold`. `scratch` must hold at least max(y_scores) + 1 zeros and is
/// left zeroed on return.
int tie_pairs_above(std::span<const int> y_scores, double y_threshold, std::span<int> scratch);

}  // namespace uniqmax
