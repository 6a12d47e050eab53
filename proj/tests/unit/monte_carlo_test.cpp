#include <gtest/gtest.h>

#include <cmath>

#include "uniqmax/errors.hpp"
#include "uniqmax/exact_dist.hpp"
#include "uniqmax/monte_carlo.hpp"

namespace uniqmax {
namespace {

Rational q(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

McConfig config(std::uint64_t seed, std::uint64_t reps, unsigned threads = 1) {
    McConfig c;
    c.seed = seed;
    c.reps = reps;
    c.threads = threads;
    return c;
}

TEST(Rng, SubstreamsAreDeterministicAndDistinct) {
    auto a = substream(7, 3);
    auto b = substream(7, 3);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a(), b());
    EXPECT_NE(substream(7, 3)(), substream(7, 4)());
    EXPECT_NE(substream(7, 3)(), substream(8, 3)());
    for (int i = 0; i < 1000; ++i) {
        const double u = a.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(SampleTournament, DeterministicGivenStream) {
    const auto m = make_classic();
    auto s1 = substream(42, 0);
    auto s2 = substream(42, 0);
    const auto a = sample_tournament(m, 2, s1);
    const auto b = sample_tournament(m, 2, s2);
    ASSERT_EQ(a.games.size(), 1u);
    EXPECT_TRUE(a.games[0] == 0 || a.games[0] == 1);
    EXPECT_EQ(a.games, b.games);

    auto s3 = substream(5, 9);
    auto s4 = substream(5, 9);
    EXPECT_EQ(sample_tournament(make_uniform(3), 12, s3).games, sample_tournament(make_uniform(3), 12, s4).games);
}

TEST(SampleTournament, PerGameFrequenciesWithinFourSigma) {
    for (const auto& m : {make_chess(q(1, 4)), make_uniform(3)}) {
        auto stream = substream(2024, 0);
        std::vector<long> counts(static_cast<std::size_t>(m.k()) + 1, 0);
        long draws = 0;
        while (draws < 100'000) {
            const auto o = sample_tournament(m, 10, stream);
            for (int a : o.games) {
                ++counts[static_cast<std::size_t>(a)];
                ++draws;
            }
        }
        for (int a = 0; a <= m.k(); ++a) {
            const double p = m.probs_f64()[a];
            const double sd = std::sqrt(draws * p * (1 - p));
            EXPECT_LE(std::abs(counts[a] - draws * p), 4 * sd) << m.label() << " a=" << a;
        }
    }
}

TEST(Wilson, KnownInterval) {
    EXPECT_NEAR(normal_quantile_two_sided(0.95), 1.959963984540054, 1e-12);
    const auto ci = wilson_interval(50, 100, 0.95, 1);
    EXPECT_DOUBLE_EQ(ci.estimate, 0.5);
    EXPECT_NEAR(ci.ci_low, 0.403831, 1e-6);
    EXPECT_NEAR(ci.ci_high, 0.596169, 1e-6);
    EXPECT_NEAR(ci.wilson_sigma(), (0.596169 - 0.403831) / (2 * 1.959964), 1e-6);
}

TEST(Wilson, BoundsAlwaysBracketEstimate) {
    for (std::uint64_t reps : {1u, 2u, 10u, 1000u}) {
        for (std::uint64_t s = 0; s <= reps; s += std::max<std::uint64_t>(1, reps / 7)) {
            const auto ci = wilson_interval(s, reps, 0.95, 0);
            EXPECT_LE(0.0, ci.ci_low);
            EXPECT_LE(ci.ci_low, ci.estimate);
            EXPECT_LE(ci.estimate, ci.ci_high);
            EXPECT_LE(ci.ci_high, 1.0);
        }
    }
    EXPECT_EQ(wilson_interval(0, 10, 0.95, 0).ci_low, 0.0);
    EXPECT_EQ(wilson_interval(10, 10, 0.95, 0).ci_high, 1.0);
    EXPECT_THROW(wilson_interval(3, 2, 0.95, 0), DomainError);
}

TEST(EstimateUniqueMax, AgreesWithExactValues) {
    const auto m = make_classic();
    const auto four = estimate_unique_max(m, 4, config(11, 100'000));
    EXPECT_LE(std::abs(four.estimate - 0.5), 3 * four.wilson_sigma());
    const auto three = estimate_unique_max(m, 3, config(12, 100'000));
    EXPECT_LE(std::abs(three.estimate - 0.75), 3 * three.wilson_sigma());
    const auto one = estimate_unique_max(m, 1, config(13, 50));
    EXPECT_EQ(one.estimate, 1.0);
    EXPECT_EQ(one.successes, 50u);
}

TEST(EstimateUniqueMax, TallyIsConsistent) {
    const auto tally = tally_unique_max(make_chess(q(1, 2)), 6, config(3, 5000));
    EXPECT_EQ(tally.unique + tally.tied, tally.reps);
    EXPECT_EQ(estimate_unique_max(make_chess(q(1, 2)), 6, config(3, 5000)).successes, tally.unique);
}

TEST(EstimateUniqueMax, IndependentOfThreadCount) {
    const auto m = make_uniform(3);
    const auto a = estimate_unique_max(m, 9, config(99, 4001, 1));
    for (unsigned threads : {2u, 5u}) {
        const auto b = estimate_unique_max(m, 9, config(99, 4001, threads));
        EXPECT_EQ(a.successes, b.successes);
        EXPECT_EQ(a.ci_low, b.ci_low);
        EXPECT_EQ(a.ci_high, b.ci_high);
    }
}

TEST(EstimateUniqueMax, CoverageOverSeeds) {
    int covered = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto e = estimate_unique_max(make_classic(), 3, config(seed, 2000));
        covered += (e.ci_low <= 0.75 && 0.75 <= e.ci_high) ? 1 : 0;
    }
    EXPECT_GE(covered, 88);
}

TEST(EstimateExceed, EdgeCases) {
    const auto m = make_classic();
    EXPECT_EQ(estimate_exceed_y_threshold(m, 5, 4.0, config(1, 1000)).estimate, 0.0);
    EXPECT_EQ(estimate_exceed_y_threshold(m, 5, -1.0, config(1, 1000)).estimate, 1.0);
    const auto single = estimate_exceed_y_threshold(m, 5, 2.5, config(1, 1));
    EXPECT_TRUE(single.estimate == 0.0 || single.estimate == 1.0);
    EXPECT_LE(single.ci_low, single.estimate);
    EXPECT_GE(single.ci_high, single.estimate);
    EXPECT_LT(single.ci_high - single.ci_low, 1.0);
    EXPECT_THROW(estimate_exceed_threshold(m, 2, 1.0, config(1, 10)), DomainError);
}

TEST(EstimateExceed, RespectsProp1LowerBound) {
    const auto m = make_classic();
    const auto e = estimate_exceed_threshold(m, 50, 1.0, config(5, 20'000));
    const double bound = prop1_lower_bound(m, 50, 1.0).value;
    EXPECT_GE(e.estimate, bound - 3 * e.wilson_sigma());
}

TEST(EstimateCollisionFree, EdgeCasesAndMarkov) {
    const auto m = make_classic();
    EXPECT_EQ(estimate_collision_free_y(m, 6, 5.0, config(1, 500)).estimate, 1.0);
    const auto three = estimate_collision_free_y(m, 3, 0.5, config(8, 100'000));
    EXPECT_LE(std::abs(three.estimate - 0.75), 3 * three.wilson_sigma());

    const auto e = estimate_collision_free(m, 50, 1.0, config(6, 20'000));
    const double mean_w = expected_wn_exact(m, 50, threshold(m, 50, 1.0)).value;
    EXPECT_GE(e.estimate, 1.0 - mean_w - 3 * e.wilson_sigma());
}

}  // namespace
}  // namespace uniqmax
