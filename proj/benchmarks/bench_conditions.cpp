#include <benchmark/benchmark.h>

#include "wcifano/conditions.hpp"

#include <random>

using namespace wcifano;

namespace {

std::vector<WciCandidate> sample_candidates(std::size_t count) {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<Int> weight(1, 20), degree(2, 40);
    std::vector<WciCandidate> out;
    out.reserve(count);
    while (out.size() < count) {
        std::vector<Int> a(9), d(3);
        for (auto& w : a) w = weight(rng);
        for (auto& x : d) x = degree(rng);
        out.emplace_back(WeightSystem(std::move(a)), Multidegree(std::move(d)));
    }
    return out;
}

} // namespace

static void BM_NecessaryConditionsReport(benchmark::State& state) {
    const auto candidates = sample_candidates(256);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(necessary_conditions(candidates[i]));
        i = (i + 1) % candidates.size();
    }
}
BENCHMARK(BM_NecessaryConditionsReport);

static void BM_ShortCircuitConditions(benchmark::State& state) {
    const auto candidates = sample_candidates(256);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(passes_necessary_conditions(candidates[i]));
        i = (i + 1) % candidates.size();
    }
}
BENCHMARK(BM_ShortCircuitConditions);

static void BM_WellFormed(benchmark::State& state) {
    const WeightSystem ws({1, 1, 1, 2, 4, 6, 9, 10, 15, 20});
    for (auto _ : state) benchmark::DoNotOptimize(wps_well_formed(ws));
}
BENCHMARK(BM_WellFormed);
