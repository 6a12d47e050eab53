#include "uniqmax/monte_carlo.hpp"

#include <algorithm>
#include <array>
#include <span>
#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <string>

#include "uniqmax/errors.hpp"
#include "uniqmax/exact_dist.hpp"
#include "uniqmax/parallel.hpp"

namespace uniqmax {

namespace {

void check_config(int n, const McConfig& cfg) {
    if (n < 1) {
        throw DomainError("Monte Carlo needs n >= 1, got n=" + std::to_string(n));
    }
    if (cfg.reps < 1) {
        throw DomainError("reps must be at least 1");
    }
    if (!(cfg.confidence > 0.0 && cfg.confidence < 1.0)) {
        throw DomainError("confidence must lie in (0, 1)");
    }
}

// Replication i draws its games from substream(seed, i); blocks only decide
// which worker runs it. `classify` maps the Y-score vector to a small index
// into the returned counters.
template <std::size_t N, class Classify>
std::array<std::uint64_t, N> run_replications(const PayoffModel& model, int n, const McConfig& cfg,
                                              Classify&& classify) {
    check_config(n, cfg);
    const PayoffSampler sampler(model);
    const int k = model.k();
    const unsigned blocks = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, cfg.threads), cfg.reps));
    std::vector<std::array<std::uint64_t, N>> partial(blocks);
    parallel_blocks(static_cast<std::size_t>(cfg.reps), blocks, [&](std::size_t b, std::size_t first, std::size_t last) {
        std::array<std::uint64_t, N> counts{};
        std::vector<int> scores(static_cast<std::size_t>(n));
        std::vector<int> scratch(static_cast<std::size_t>(k) * static_cast<std::size_t>(n - 1) + 1, 0);
        for (std::size_t rep = first; rep < last; ++rep) {
            Xoshiro256 rng = substream(cfg.seed, rep);
            std::fill(scores.begin(), scores.end(), 0);
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    const int a = sampler(rng);
                    scores[i] += a;
                    scores[j] += k - a;
                }
            }
            ++counts[classify(std::span<const int>(scores), std::span<int>(scratch))];
        }
        partial[b] = counts;
    });
    std::array<std::uint64_t, N> total{};
    for (const auto& counts : partial) {
        for (std::size_t c = 0; c < N; ++c) {
            total[c] += counts[c];
        }
    }
    return total;
}

}  // namespace

double EstimateCI::wilson_sigma() const {
    return (ci_high - ci_low) / (2.0 * normal_quantile_two_sided(confidence));
}

double normal_quantile_two_sided(double confidence) {
    if (!(confidence > 0.0 && confidence < 1.0)) {
        throw DomainError("confidence must lie in (0, 1)");
    }
    return std::sqrt(2.0) * boost::math::erfc_inv(1.0 - confidence);
}

EstimateCI wilson_interval(std::uint64_t successes, std::uint64_t reps, double confidence, std::uint64_t seed) {
    if (reps == 0 || successes > reps) {
        throw DomainError("Wilson interval needs 0 <= successes <= reps and reps >= 1");
    }
    const double z = normal_quantile_two_sided(confidence);
    const double r = static_cast<double>(reps);
    const double p = static_cast<double>(successes) / r;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / r;
    const double center = (p + z2 / (2.0 * r)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / r + z2 / (4.0 * r * r)) / denom;

    EstimateCI ci;
    ci.estimate = p;
    ci.successes = successes;
    ci.reps = reps;
    ci.ci_low = std::min(p, std::max(0.0, center - half));
    ci.ci_high = std::max(p, std::min(1.0, center + half));
    ci.seed = seed;
    ci.confidence = confidence;
    return ci;
}

PayoffSampler::PayoffSampler(const PayoffModel& model) {
    double acc = 0.0;
    for (double p : model.probs_f64()) {
        acc += p;
        cumulative_.push_back(acc);
    }
}

TournamentOutcome sample_tournament(const PayoffModel& model, int n, Xoshiro256& stream) {
    if (n < 1) {
        throw DomainError("sample_tournament needs n >= 1");
    }
    const PayoffSampler sampler(model);
    TournamentOutcome outcome;
    outcome.n = n;
    outcome.k = model.k();
    outcome.games.resize(game_count(n));
    for (auto& a : outcome.games) {
        a = sampler(stream);
    }
    return outcome;
}

UniqueMaxTally tally_unique_max(const PayoffModel& model, int n, const McConfig& cfg) {
    auto counts = run_replications<2>(model, n, cfg, [](std::span<const int> scores, std::span<int>) {
        return has_unique_max(scores) ? std::size_t{0} : std::size_t{1};
    });
    return UniqueMaxTally{counts[0], counts[1], cfg.reps};
}

EstimateCI estimate_unique_max(const PayoffModel& model, int n, const McConfig& cfg) {
    const auto tally = tally_unique_max(model, n, cfg);
    return wilson_interval(tally.unique, tally.reps, cfg.confidence, cfg.seed);
}

EstimateCI estimate_exceed_y_threshold(const PayoffModel& model, int n, double y_threshold, const McConfig& cfg) {
    auto counts = run_replications<2>(model, n, cfg, [y_threshold](std::span<const int> scores, std::span<int>) {
        const int top = *std::max_element(scores.begin(), scores.end());
        return exceeds(top, y_threshold) ? std::size_t{0} : std::size_t{1};
    });
    return wilson_interval(counts[0], cfg.reps, cfg.confidence, cfg.seed);
}

EstimateCI estimate_exceed_threshold(const PayoffModel& model, int n, double epsilon, const McConfig& cfg) {
    return estimate_exceed_y_threshold(model, n, threshold(model, n, epsilon).t_n_lattice, cfg);
}

EstimateCI estimate_collision_free_y(const PayoffModel& model, int n, double y_threshold, const McConfig& cfg) {
    auto counts = run_replications<2>(model, n, cfg, [y_threshold](std::span<const int> scores, std::span<int> scratch) {
        return tie_pairs_above(scores, y_threshold, scratch) == 0 ? std::size_t{0} : std::size_t{1};
    });
    return wilson_interval(counts[0], cfg.reps, cfg.confidence, cfg.seed);
}

EstimateCI estimate_collision_free(const PayoffModel& model, int n, double epsilon, const McConfig& cfg) {
    return estimate_collision_free_y(model, n, threshold(model, n, epsilon).t_n_lattice, cfg);
}

}  // namespace uniqmax
