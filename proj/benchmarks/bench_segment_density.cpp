// Microbenchmarks for the segment-density kernels: the O(|T|²) reference
// scan, the O(|T|) hull sweep, and the O(l²) incremental update.

#include <cstdint>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "burstcore/segment_density.hpp"
#include "burstcore/temporal_graph.hpp"

namespace {

burstcore::DegreeSequence random_sequence(std::int64_t horizon, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int32_t> val(0, 9);
    burstcore::DegreeSequence ds;
    ds.values.resize(static_cast<std::size_t>(horizon));
    for (auto& v : ds.values) v = val(rng);
    return ds;
}

void BM_BruteForceMsd(benchmark::State& state) {
    const auto ds = random_sequence(state.range(0), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(burstcore::brute_force_msd(ds, 3));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BruteForceMsd)->Range(64, 4096)->Complexity(benchmark::oNSquared);

void BM_ComputeMsd(benchmark::State& state) {
    const auto ds = random_sequence(state.range(0), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(burstcore::compute_msd(ds, 3));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ComputeMsd)->Range(64, 4096)->Complexity(benchmark::oN);

// One decrement + incremental refresh per iteration. The sequence drains as
// the benchmark runs, so it is rebuilt (untimed work amortized over the
// thousands of updates a fresh sequence supports) whenever it empties.
void BM_UpdateMsd(benchmark::State& state) {
    const std::int32_t l = 3;
    const auto horizon = state.range(0);
    auto ds = random_sequence(horizon, 1);
    auto cached = burstcore::compute_msd(ds, l);
    std::size_t cursor = 0;
    for (auto _ : state) {
        std::size_t scanned = 0;
        while (ds.values[cursor] == 0 && scanned < ds.values.size()) {
            cursor = (cursor + 1) % ds.values.size();
            ++scanned;
        }
        if (ds.values[cursor] == 0) {
            state.PauseTiming();
            ds = random_sequence(horizon, cursor + 2);
            cached = burstcore::compute_msd(ds, l);
            cursor = 0;
            state.ResumeTiming();
            continue;
        }
        ds.values[cursor] -= 1;
        benchmark::DoNotOptimize(burstcore::update_msd(
            ds, cached.cache, static_cast<burstcore::Timestamp>(cursor + 1), l));
        cursor = (cursor + 1) % ds.values.size();
    }
}
BENCHMARK(BM_UpdateMsd)->Range(64, 4096);

}  // namespace
