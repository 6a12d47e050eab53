#include "uniqmax/tournament.hpp"

#include <algorithm>
#include <string>

#include "uniqmax/errors.hpp"

namespace uniqmax {

void check_outcome(const TournamentOutcome& outcome) {
    if (outcome.n < 1 || outcome.k < 1) {
        throw ModelError("outcome needs n >= 1 and k >= 1");
    }
    if (outcome.games.size() != game_count(outcome.n)) {
        throw ModelError("outcome for n=" + std::to_string(outcome.n) + " needs " +
                         std::to_string(game_count(outcome.n)) + " games, got " +
                         std::to_string(outcome.games.size()));
    }
    for (int a : outcome.games) {
        if (a < 0 || a > outcome.k) {
            throw ModelError("payoff index " + std::to_string(a) + " outside 0.." + std::to_string(outcome.k));
        }
    }
}

ScoreVector score_vector(const TournamentOutcome& outcome) {
    check_outcome(outcome);
    ScoreVector s;
    s.y_scores.assign(outcome.n, 0);
    std::size_t g = 0;
    for (int i = 0; i < outcome.n; ++i) {
        for (int j = i + 1; j < outcome.n; ++j, ++g) {
            s.y_scores[i] += outcome.games[g];
            s.y_scores[j] += outcome.k - outcome.games[g];
        }
    }
    return s;
}

bool has_unique_max(std::span<const int> y_scores) {
    if (y_scores.empty()) {
        return false;
    }
    int best = y_scores[0];
    int ties = 1;
    for (std::size_t i = 1; i < y_scores.size(); ++i) {
        if (y_scores[i] > best) {
            best = y_scores[i];
            ties = 1;
        } else if (y_scores[i] == best) {
            ++ties;
        }
    }
    return ties == 1;
}

int tie_pairs_above(std::span<const int> y_scores, double y_threshold, std::span<int> scratch) {
    int pairs = 0;
    for (int y : y_scores) {
        if (exceeds(y, y_threshold)) {
            pairs += scratch[y]++;
        }
    }
    for (int y : y_scores) {
        scratch[y] = 0;
    }
    return pairs;
}

}  // namespace uniqmax
