// SPDX-License-Identifier: Apache-2.0
// Parallel cell evaluation against the serial reference, plus synthesis cost.
#include <benchmark/benchmark.h>


#include "csyn/bench.hpp"
#include "csyn/layout.hpp"

namespace {

std::vector<csyn::BenchmarkCase> make_cases(std::size_t seeds) {
    std::vector<csyn::BenchmarkCase> cases;
    for (std::size_t n : {10, 16, 20})
        for (std::uint64_t s = 1; s <= seeds; ++s) cases.push_back({csyn::gen_random_circuit(n, 2000, s), s});
    return cases;
}

std::vector<csyn::Topology> baselines() {
    std::vector<csyn::Topology> out;
    for (const char* d : {"almaden20", "cairo27", "prague33", "sycamore53"}) out.push_back(csyn::builtin_topology(d));
    return out;
}

void BM_ComparisonSerial(benchmark::State& state) {
    const auto cases = make_cases(static_cast<std::size_t>(state.range(0)));
    const auto tops = baselines();
    for (auto _ : state) benchmark::DoNotOptimize(csyn::run_comparison_serial(cases, tops, {0.001}));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cases.size() * (tops.size() + 1)));
}

void BM_ComparisonParallel(benchmark::State& state) {
    const auto cases = make_cases(static_cast<std::size_t>(state.range(0)));
    const auto tops = baselines();
    if (!(csyn::run_comparison(cases, tops, {0.001}) == csyn::run_comparison_serial(cases, tops, {0.001}))) {
        state.SkipWithError("parallel report differs from serial reference");
        return;
    }
    for (auto _ : state) benchmark::DoNotOptimize(csyn::run_comparison(cases, tops, {0.001}));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cases.size() * (tops.size() + 1)));
}

void BM_Synthesize(benchmark::State& state) {
    const auto c = csyn::gen_random_circuit(static_cast<std::size_t>(state.range(0)), 2000, 1);
    for (auto _ : state) benchmark::DoNotOptimize(csyn::synthesize_topology(c));
}

}  // namespace

BENCHMARK(BM_ComparisonSerial)->Arg(2)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComparisonParallel)->Arg(2)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Synthesize)->DenseRange(8, 33, 5)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
