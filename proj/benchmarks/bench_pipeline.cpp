#include <benchmark/benchmark.h>

#include "chromcon/extension.hpp"
#include "chromcon/generators.hpp"
#include "chromcon/solver.hpp"

using namespace chromcon;

namespace {

struct Fixture {
  Graph graph;
  Template tmpl;
  std::vector<std::vector<int>> partition;
  int k = 2;
  ColorSet colors;

  Fixture() {
    graph = random_graph(12, 0.45, 31337);
    const int chi = chromatic_number(graph);
    const auto coloring = find_coloring(graph, ColorSet{chi});
    partition.assign(static_cast<std::size_t>(chi), {});
    for (int v = 0; v < 12; ++v)
      partition[static_cast<std::size_t>(coloring->colors[v] - 1)].push_back(v);
    colors = ColorSet{std::max(strong_palette_floor(k), chi + 2 * k - 2)};
    tmpl = empty_template(12);
    tmpl.precolor[0] = 1;
    tmpl.forbidden[4] = {2};
    tmpl.forbidden[9] = {1};
  }
};

}  // namespace

static void BM_Extend316k(benchmark::State& state) {
  const Fixture fx;
  for (auto _ : state)
    benchmark::DoNotOptimize(extend_316k(fx.graph, fx.tmpl, fx.partition, fx.k, fx.colors));
}
BENCHMARK(BM_Extend316k);

static void BM_Extend4k(benchmark::State& state) {
  const Fixture fx;
  const ColorSet colors{fx.colors.size + 1};  // 4k needs one more color here
  for (auto _ : state)
    benchmark::DoNotOptimize(extend_4k(fx.graph, fx.tmpl, fx.partition, fx.k, colors));
}
BENCHMARK(BM_Extend4k);
