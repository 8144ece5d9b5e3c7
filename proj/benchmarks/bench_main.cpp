#include <benchmark/benchmark.h>

#include "lscat/catalog.hpp"
#include "lscat/homology.hpp"
#include "lscat/json_io.hpp"

using namespace lscat;

static void BM_BarHomology(benchmark::State& state) {
    CatalogEntry entry = get(static_cast<Group>(state.range(0)), static_cast<int>(state.range(1)));
    int cutoff = static_cast<int>(state.range(2));
    for (auto _ : state) {
        auto dims = bar_homology(entry.algebra, cutoff);
        benchmark::DoNotOptimize(dims);
    }
}
BENCHMARK(BM_BarHomology)->Args({0, 2, 16})->Args({3, 2, 16})->Args({4, 2, 16})->Args({4, 3, 16})->Args({4, 2, 20});

static void BM_CobarHomology(benchmark::State& state) {
    CatalogEntry entry = get(static_cast<Group>(state.range(0)), static_cast<int>(state.range(1)));
    int cutoff = static_cast<int>(state.range(2));
    for (auto _ : state) {
        auto dims = cobar_homology(entry.loop_coalgebra, cutoff);
        benchmark::DoNotOptimize(dims);
    }
}
BENCHMARK(BM_CobarHomology)->Args({0, 2, 16})->Args({3, 2, 16})->Args({4, 3, 20});

static void BM_Invariants(benchmark::State& state) {
    CatalogEntry entry = get(static_cast<Group>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) {
        auto rep = compute_invariants(entry);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_Invariants)->Args({1, 2})->Args({3, 2})->Args({4, 3});

static void BM_VerifyEntry(benchmark::State& state) {
    CatalogEntry entry = get(static_cast<Group>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) {
        auto rep = verify_entry(entry, 14);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_VerifyEntry)->Args({0, 2})->Args({1, 3});

BENCHMARK_MAIN();
