#include <multituran/colouring.hpp>
#include <multituran/corpus.hpp>
#include <multituran/generators.hpp>
#include <multituran/small_graph.hpp>
#include <multituran/subgraph.hpp>
#include <multituran/threshold.hpp>

#include <benchmark/benchmark.h>

using namespace multituran;

static void BM_CountTriangles(benchmark::State & state)
{
    auto g = bondy_prototype(4, static_cast<std::size_t>(state.range(0)));
    auto threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_copies(g, complete_graph(3), CopyMode::any, threads));
}
BENCHMARK(BM_CountTriangles)->Args({8, 1})->Args({8, 4})->Args({12, 1})->Args({12, 4});

static void BM_FindK3122(benchmark::State & state)
{
    auto g = lower_bound_graph(2, static_cast<std::size_t>(state.range(0)));
    auto h = to_small_graph(fixture("K3122").graph);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_copy(g, h, CopyMode::any));
}
BENCHMARK(BM_FindK3122)->Arg(4)->Arg(5);

static void BM_ChromaticNumber(benchmark::State & state)
{
    auto g = bondy_prototype(4, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_ChromaticNumber)->Arg(4)->Arg(8);

static void BM_AccDecider(benchmark::State & state)
{
    auto h = to_small_graph(fixture("K2p2_4").graph);
    for (auto _ : state)
        benchmark::DoNotOptimize(almost_colour_critical_witness(h));
}
BENCHMARK(BM_AccDecider);

static void BM_CycleSpectrum(benchmark::State & state)
{
    auto g = two_clique_union(2, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(cycle_spectrum(g, g.vertex_count()));
}
BENCHMARK(BM_CycleSpectrum)->Arg(16)->Arg(24);

static void BM_SearchWitness(benchmark::State & state)
{
    SearchOptions o;
    o.parts = 4;
    o.part_size = 3;
    o.budget = static_cast<std::uint64_t>(state.range(0));
    o.seed = 7;
    for (auto _ : state)
        benchmark::DoNotOptimize(search_witness(complete_graph(3), o));
}
BENCHMARK(BM_SearchWitness)->Arg(1000);

BENCHMARK_MAIN();
