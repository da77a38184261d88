#include <benchmark/benchmark.h>

#include "chromcon/generators.hpp"
#include "chromcon/solver.hpp"

using namespace chromcon;

static void BM_ChromaticPetersen(benchmark::State& state) {
  const Graph g = petersen_graph();
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_ChromaticPetersen);

static void BM_ChromaticRandom(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 12345);
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_ChromaticRandom)->Arg(8)->Arg(10)->Arg(12);

static void BM_RespectingSearch(benchmark::State& state) {
  const Graph g = random_graph(10, 0.5, 777);
  Template t = empty_template(10);
  t.precolor[0] = 1;
  t.forbidden[3] = {2};
  t.forbidden[7] = {1};
  for (auto _ : state)
    benchmark::DoNotOptimize(find_respecting_coloring(g, t, ColorSet{5}));
}
BENCHMARK(BM_RespectingSearch);
