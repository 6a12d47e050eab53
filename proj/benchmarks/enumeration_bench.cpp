#include <benchmark/benchmark.h>

#include "uniqmax/enumeration.hpp"

namespace {

using namespace uniqmax;

void BM_ExactUniqueMaxClassic(benchmark::State& state) {
    const auto model = make_classic();
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_unique_max(model, n));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(1) << (n * (n - 1) / 2));
}
BENCHMARK(BM_ExactUniqueMaxClassic)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_ExactUniqueMaxWeighted(benchmark::State& state) {
    const auto model = make_uniform(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_unique_max(model, 4));
    }
}
BENCHMARK(BM_ExactUniqueMaxWeighted)->Unit(benchmark::kMillisecond);

void BM_ScoreCensus(benchmark::State& state) {
    const auto model = make_classic();
    for (auto _ : state) {
        benchmark::DoNotOptimize(score_census(model, 6));
    }
}
BENCHMARK(BM_ScoreCensus)->Unit(benchmark::kMillisecond);

}  // namespace
