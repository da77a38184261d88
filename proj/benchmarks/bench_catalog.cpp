#include <benchmark/benchmark.h>

#include "chromcon/catalog.hpp"
#include "chromcon/generators.hpp"

using namespace chromcon;

static void BM_CanonicalCode(benchmark::State& state) {
  const Graph g = random_graph(8, 0.5, 2718);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_CanonicalCode);

static void BM_AllGraphs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(all_graphs(n));
}
BENCHMARK(BM_AllGraphs)->Arg(5)->Arg(6);
