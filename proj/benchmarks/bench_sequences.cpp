#include <benchmark/benchmark.h>

#include <numeric>

#include "chromcon/generators.hpp"
#include "chromcon/sequences.hpp"

using namespace chromcon;

static void BM_CriticalSequence(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  WeightedClass p;
  p.vertices.resize(static_cast<std::size_t>(size));
  std::iota(p.vertices.begin(), p.vertices.end(), 0);
  std::uint64_t rng = 5;
  for (int i = 0; i < size; ++i)
    p.weights.push_back(static_cast<int>(splitmix64(rng) % 4));
  for (auto _ : state) benchmark::DoNotOptimize(critical_sequence(p, 5));
}
BENCHMARK(BM_CriticalSequence)->Arg(8)->Arg(16)->Arg(32);

static void BM_PartitionBounded(benchmark::State& state) {
  std::vector<int> values{3, 3, 2, 2, 2, 1, 1, 1, 1};  // sum 16, k=4, q=4
  for (auto _ : state) benchmark::DoNotOptimize(partition_bounded(values, 4, 4));
}
BENCHMARK(BM_PartitionBounded);
