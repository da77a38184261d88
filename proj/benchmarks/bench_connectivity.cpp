#include <benchmark/benchmark.h>

#include "chromcon/connectivity.hpp"
#include "chromcon/generators.hpp"

using namespace chromcon;

static void BM_Connectivity(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 4242);
  for (auto _ : state) benchmark::DoNotOptimize(vertex_connectivity_at_least(g, 3));
}
BENCHMARK(BM_Connectivity)->Arg(8)->Arg(12)->Arg(16);

static void BM_FindCutset(benchmark::State& state) {
  const Graph g = random_graph(10, 0.3, 99);
  for (auto _ : state) benchmark::DoNotOptimize(find_cutset(g, 2));
}
BENCHMARK(BM_FindCutset);
