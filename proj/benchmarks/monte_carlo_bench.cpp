#include <benchmark/benchmark.h>

#include "uniqmax/monte_carlo.hpp"

namespace {

using namespace uniqmax;

void BM_EstimateUniqueMax(benchmark::State& state) {
    const auto model = make_classic();
    McConfig cfg;
    cfg.reps = 10'000;
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_unique_max(model, n, cfg));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.reps));
}
BENCHMARK(BM_EstimateUniqueMax)->Arg(10)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_SampleTournament(benchmark::State& state) {
    const auto model = make_uniform(3);
    auto stream = substream(1, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_tournament(model, 100, stream));
    }
}
BENCHMARK(BM_SampleTournament);

}  // namespace
