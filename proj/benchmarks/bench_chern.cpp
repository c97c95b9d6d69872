#include <benchmark/benchmark.h>

#include "wcifano/chern.hpp"

using namespace wcifano;

static void BM_ChernProfile(benchmark::State& state) {
    const WciCandidate cand{WeightSystem({1, 1, 1, 1, 1, 2, 3, 5, 8, 13, 20}),
                            Multidegree({21, 34, 40})};
    const int depth = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(chern_profile(cand, depth));
}
BENCHMARK(BM_ChernProfile)->Arg(4)->Arg(13);

static void BM_TopOnlySign(benchmark::State& state) {
    const std::vector<Int> a{1, 1, 1, 1, 1, 2, 3, 5, 8, 13, 20};
    const std::vector<Int> d{21, 34, 40};
    for (auto _ : state)
        benchmark::DoNotOptimize(power_sum_sign(a, d, 4));
}
BENCHMARK(BM_TopOnlySign);
