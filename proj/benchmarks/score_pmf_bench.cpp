#include <benchmark/benchmark.h>

#include "uniqmax/exact_dist.hpp"

namespace {

using namespace uniqmax;

void BM_ScorePmfFloat(benchmark::State& state) {
    const auto model = make_uniform(3);
    const int games = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(score_pmf(model, games, {.mode = Mode::binary64}));
    }
    state.SetComplexityN(games);
}
BENCHMARK(BM_ScorePmfFloat)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_ScorePmfExact(benchmark::State& state) {
    Rational draw(1, 4);
    const auto model = make_chess(draw);
    const int games = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(score_pmf(model, games));
    }
}
BENCHMARK(BM_ScorePmfExact)->RangeMultiplier(4)->Range(16, 1024);

void BM_ExpectedWnFloat(benchmark::State& state) {
    const auto model = make_classic();
    const int n = static_cast<int>(state.range(0));
    const auto t = threshold(model, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(expected_wn_exact(model, n, t, {.mode = Mode::binary64}));
    }
}
BENCHMARK(BM_ExpectedWnFloat)->Arg(100)->Arg(1600)->Arg(6400)->Unit(benchmark::kMillisecond);

}  // namespace
