#include <benchmark/benchmark.h>

#include "wcifano/search.hpp"

using namespace wcifano;

// One full pruned box per iteration; the n = 8..10 boxes dominate the
// verification runs, so regressions here matter most.
static void BM_EnumerateBox(benchmark::State& state) {
    SearchCaps caps;
    caps.dim = state.range(0);
    caps.max_weight = 20;
    caps.max_degree = 40;
    const int l = ceil_log(2, caps.dim + 2);
    std::uint64_t survivors = 0;
    for (auto _ : state)
        survivors += enumerate_candidates(caps, l, nullptr, 1);
    benchmark::DoNotOptimize(survivors);
}
BENCHMARK(BM_EnumerateBox)->Arg(5)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_FilteredCorpus(benchmark::State& state) {
    SearchCaps caps;
    caps.dim = state.range(0);
    caps.max_weight = 20;
    caps.max_degree = 40;
    for (auto _ : state) {
        std::uint64_t count = enumerate_filtered(caps, 1, nullptr, 1);
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_FilteredCorpus)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
