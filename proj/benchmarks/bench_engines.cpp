#include <benchmark/benchmark.h>

#include "dpcolor/chromatic.hpp"
#include "dpcolor/configuration.hpp"
#include "dpcolor/constructible.hpp"
#include "dpcolor/corpus.hpp"

using namespace dpcolor;

static void BM_BlockDecomposition(benchmark::State& state) {
    Graph g = bowtie_graph();
    for (auto _ : state) benchmark::DoNotOptimize(block_decomposition(g));
}
BENCHMARK(BM_BlockDecomposition);

static void BM_SolveMConfiguration(benchmark::State& state) {
    Configuration m = build_m(complete_graph(static_cast<int>(state.range(0))), 2,
                              std::vector<int>(state.range(0), 0));
    for (auto _ : state) benchmark::DoNotOptimize(solve(m));
}
BENCHMARK(BM_SolveMConfiguration)->Arg(3)->Arg(4)->Arg(5);

static void BM_Recognizer(benchmark::State& state) {
    Configuration merged = merge(build_m(complete_graph(3), 2, {0, 0, 0}), 0,
                                 build_c(5, 2, CycleTwist::Odd), 0, {0, 1});
    for (auto _ : state) benchmark::DoNotOptimize(is_constructible(merged));
}
BENCHMARK(BM_Recognizer);

static void BM_FindTransversal(benchmark::State& state) {
    Cover c = identity_cover(cycle_graph(static_cast<int>(state.range(0))), 2);
    PropertyOracle o = edgeless_property();
    for (auto _ : state) benchmark::DoNotOptimize(find_P_transversal(c, o));
}
BENCHMARK(BM_FindTransversal)->Arg(5)->Arg(7);

static void BM_ChiDpCycle(benchmark::State& state) {
    Graph g = cycle_graph(static_cast<int>(state.range(0)));
    PropertyOracle o = edgeless_property();
    for (auto _ : state) benchmark::DoNotOptimize(chi_dp(g, o));
}
BENCHMARK(BM_ChiDpCycle)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
