#pragma once

#include <cstdint>
#include <vector>

#include "uniqmax/payoff_model.hpp"
#include "uniqmax/rng.hpp"
#include "uniqmax/tournament.hpp"

namespace uniqmax {

struct McConfig {
    std::uint64_t seed = 1;
    std::uint64_t reps = 10'000;
    double confidence = 0.95;
    unsigned threads = 1;
};

struct EstimateCI {
    double estimate = 0.0;
    std::uint64_t successes = 0;
    std::uint64_t reps = 0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t seed = 0;
    double confidence = 0.95;

    /// Half-width of the interval divided by its z-value.
    double wilson_sigma() const;
};

/// Two-sided z-value for a central interval of the given coverage.
double normal_quantile_two_sided(double confidence);

/// Wilson score interval for `successes` out of `reps`.
EstimateCI wilson_interval(std::uint64_t successes, std::uint64_t reps, double confidence, std::uint64_t seed);

/// Inverse-CDF sampler over payoff indices 0..k with binary64 cumulative
/// weights, atoms scanned in ascending order.
class PayoffSampler {
   public:
    explicit PayoffSampler(const PayoffModel& model);

    int operator()(Xoshiro256& rng) const {
        const double u = rng.uniform();
        for (std::size_t a = 0; a + 1 < cumulative_.size(); ++a) {
            if (u < cumulative_[a]) {
                return static_cast<int>(a);
            }
        }
        return static_cast<int>(cumulative_.size()) - 1;
    }

   private:
    std::vector<double> cumulative_;
};

/// Draws every game independently, in canonical game order.
TournamentOutcome sample_tournament(const PayoffModel& model, int n, Xoshiro256& stream);

struct UniqueMaxTally {
    std::uint64_t unique = 0;
    std::uint64_t tied = 0;
    std::uint64_t reps = 0;
};

/// Counts replications with a strict unique maximum and with a tie at the top
/// in the same pass.
UniqueMaxTally tally_unique_max(const PayoffModel& model, int n, const McConfig& cfg);

EstimateCI estimate_unique_max(const PayoffModel& model, int n, const McConfig& cfg);

/// Fraction of replications whose maximum Y-score is strictly above the
/// threshold. The epsilon overload uses k * t_n.
EstimateCI estimate_exceed_threshold(const PayoffModel& model, int n, double epsilon, const McConfig& cfg);
EstimateCI estimate_exceed_y_threshold(const PayoffModel& model, int n, double y_threshold, const McConfig& cfg);

/// Fraction of replications with no two players tied strictly above the
/// threshold, i.e. W_n(t) = 0.
EstimateCI estimate_collision_free(const PayoffModel& model, int n, double epsilon, const McConfig& cfg);
EstimateCI estimate_collision_free_y(const PayoffModel& model, int n, double y_threshold, const McConfig& cfg);

}  // namespace uniqmax
