#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "chromcon/extension.hpp"
#include "chromcon/generators.hpp"
#include "chromcon/reduction.hpp"
#include "chromcon/sequences.hpp"
#include "chromcon/solver.hpp"
#include "support/instances.hpp"

using namespace chromcon;

TEST_CASE("partition validation") {
  const Graph c4 = cycle_graph(4);
  CHECK_NOTHROW(validate_partition(c4, {{0, 2}, {1, 3}}));
  CHECK_THROWS_AS(validate_partition(c4, {{0, 1}, {2, 3}}), std::invalid_argument);  // not stable
  CHECK_THROWS_AS(validate_partition(c4, {{0, 2}, {1}}), std::invalid_argument);     // uncovered
  CHECK_THROWS_AS(validate_partition(c4, {{0, 2}, {1, 3, 1}}), std::invalid_argument);
}

TEST_CASE("padding adds an isolated vertex per fully precolored class") {
  const Graph c4 = cycle_graph(4);
  Template t = empty_template(4);
  t.precolor[0] = 1;
  t.precolor[2] = 2;
  const PaddedInstance inst = pad_empty_classes(c4, t, {{0, 2}, {1, 3}});
  CHECK(inst.graph.vertex_count() == 5);
  CHECK(inst.graph.degree(4) == 0);
  CHECK(inst.classes[0] == std::vector<int>{0, 2, 4});
  CHECK(inst.classes[1] == std::vector<int>{1, 3});
  CHECK(inst.original_n == 4);
}

// Hand trace: one class of four weight-1 vertices at k=2 with an ample
// palette. The critical singleton sequence alternates non-jump/jump, the
// landmarks sit at positions 1 and 3, and the single window pass colors the
// first two vertices with one shared color.
TEST_CASE("reduction of a four-vertex unit-weight class") {
  Graph g(4);  // stable class: no edges
  Template t = empty_template(4);
  t.forbidden[0] = {1};
  t.forbidden[1] = {2};
  t.forbidden[2] = {3};
  t.forbidden[3] = {4};
  const ReductionState st = reduce_classes(g, t, {{0, 1, 2, 3}}, 2, ColorSet{6});

  REQUIRE(st.classes.size() == 1);
  const ClassReduction& cls = st.classes[0];
  CHECK(cls.weight == 4);
  CHECK(cls.p == 2);
  CHECK(cls.q == 1);
  CHECK(cls.t == 1);
  CHECK(cls.reduced.size() == 2);
  REQUIRE(cls.parts.size() == 2);
  for (const auto& part : cls.parts) {
    int w = 0;
    for (int v : part) w += st.weight_of(v);
    CHECK(w == 1);
  }
  std::set<int> reduced_colors;
  for (int v : cls.reduced) {
    CHECK(st.c1[static_cast<std::size_t>(v)] != 0);
    reduced_colors.insert(st.c1[static_cast<std::size_t>(v)]);
  }
  CHECK(static_cast<int>(reduced_colors.size()) <= cls.q);
  CHECK(cls.x == 0);  // tail weight 2 = t*k
  CHECK(st.trace.all_ok());
}

TEST_CASE("zero-weight classes reduce trivially") {
  Graph g(3);
  const ReductionState st = reduce_classes(g, empty_template(3), {{0, 1, 2}}, 2, ColorSet{5});
  const ClassReduction& cls = st.classes[0];
  CHECK(cls.p == 0);
  CHECK(cls.q == 0);
  CHECK(cls.reduced.empty());
  CHECK(cls.parts.size() == 1);
}

TEST_CASE("a single vertex of weight k-1 stays in the remainder") {
  Graph g(1);
  Template t = empty_template(1);
  t.forbidden[0] = {1};  // weight 1 = k-1 for k=2
  const ReductionState st = reduce_classes(g, t, {{0}}, 2, ColorSet{5});
  const ClassReduction& cls = st.classes[0];
  CHECK(cls.p == 0);
  CHECK(cls.q == 0);
  CHECK(cls.reduced.empty());
  REQUIRE(cls.parts.size() == 1);
  CHECK(cls.parts[0] == std::vector<int>{0});
}

TEST_CASE("reduction rejects templates that are not good") {
  Graph g(2);
  Template t = empty_template(2);
  t.forbidden[0] = {1, 2};  // |F| = k
  CHECK_THROWS_AS(reduce_classes(g, t, {{0, 1}}, 2, ColorSet{5}), std::invalid_argument);
}

// A class whose reduced prefix overshoots q*k: weights (3,4,4,4,4,5) at
// k=6 give the critical sequence (3,4,4,4,4,5) with landmarks 0 and 1, so
// the prefix weighs 7 > 6 and the leftover excess is -1. Everything the
// later stages rely on still holds, and the full pipeline absorbs the
// class during augmentation.
TEST_CASE("negative leftover excess is tolerated and absorbed") {
  const int k = 6;
  const ColorSet colors{18};
  const int weights[6] = {3, 4, 4, 5, 4, 4};
  Graph g(7);
  Template t = empty_template(7);
  t.precolor[0] = 1;
  int next_col = 1;
  for (int v = 1; v < 7; ++v) {
    for (int i = 0; i < weights[v - 1]; ++i)
      t.forbidden[v].push_back((next_col++ % colors.size) + 1);
    std::sort(t.forbidden[v].begin(), t.forbidden[v].end());
    t.forbidden[v].erase(std::unique(t.forbidden[v].begin(), t.forbidden[v].end()),
                         t.forbidden[v].end());
  }
  const std::vector<std::vector<int>> partition{{0}, {1, 2, 3, 4, 5, 6}};

  const ReductionState st = reduce_classes(g, t, partition, k, colors);
  CHECK(st.trace.all_ok());
  CHECK(st.classes[1].x == -1);
  CHECK(st.classes[1].t >= 1);

  const auto run = extend_316k(g, t, partition, k, colors);
  CHECK(is_proper(g, run.coloring, colors));
  CHECK(respects(g, t, run.coloring));
  CHECK_FALSE(run.used_fallback);
  CHECK(run.trace.all_ok());
}

// Drives the window step into its swap case: at k=5 over 14 colors, eight
// precolored vertices leave the pool {9..14}, and a class of three
// weight-3 vertices has a critical sequence with landmarks 0 and 1, so the
// single window spans all three terms. The forbidden sets make the first
// two term pools disjoint ({12,13,14} and {9,10,11}) while the last pool
// {11,13,14} meets the first, so the shared pair is (first, last), two
// colors are needed, and the middle term is uncolored and swapped to the
// back. The reduced set then keeps the first and last vertices on one
// color.
TEST_CASE("window swap case, engineered") {
  const int k = 5;
  const ColorSet colors{14};
  Graph g(11);
  Template t = empty_template(11);
  for (int v = 0; v < 8; ++v) t.precolor[v] = v + 1;
  t.forbidden[8] = {9, 10, 11};
  t.forbidden[9] = {12, 13, 14};
  t.forbidden[10] = {9, 10, 12};
  const std::vector<std::vector<int>> partition{
      {0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10}};

  const ReductionState st = reduce_classes(g, t, partition, k, colors);
  CHECK(st.trace.all_ok());
  long long swaps = 0;
  for (const StageTrace& stage : st.trace.stages())
    for (const auto& [key, value] : stage.values)
      if (key == "window_swaps") swaps += value;
  CHECK(swaps == 1);

  const ClassReduction& cls = st.classes[2];
  CHECK(cls.q == 1);
  CHECK(cls.t == 0);
  CHECK(cls.reduced == std::vector<int>{8, 10});
  CHECK(st.c1[8] == 13);
  CHECK(st.c1[10] == 13);
  CHECK(st.c1[9] == 0);
  REQUIRE(cls.parts.size() == 1);
  CHECK(cls.parts[0] == std::vector<int>{9});
  CHECK(cls.x == 3);
}

// For the k range the random pipelines use, a negative excess cannot occur
// at all: exhaustive over every weight multiset of size up to 7.
TEST_CASE("leftover excess stays nonnegative for small k") {
  for (int k = 1; k <= 4; ++k) {
    std::vector<int> weights;
    auto recurse = [&](auto&& self, int min_w) -> void {
      if (!weights.empty()) {
        WeightedClass p;
        p.weights = weights;
        p.vertices.resize(weights.size());
        std::iota(p.vertices.begin(), p.vertices.end(), 0);
        const FitSequence s = critical_sequence(p, k);
        const JumpProfile prof = jump_profile(s, k);
        const int n_ell = prof.landmark_positions.back();
        const auto cum = s.cumulative_weights();
        const int total = s.total_weight();
        const int t = total / k - prof.landmarks.back();
        const int reduced = (n_ell >= 2) ? cum[static_cast<std::size_t>(n_ell) - 2] : 0;
        CHECK(total - reduced - t * k >= 0);
      }
      if (weights.size() == 7) return;
      for (int w = min_w; w <= k - 1; ++w) {
        weights.push_back(w);
        self(self, w);
        weights.pop_back();
      }
    };
    recurse(recurse, 0);
  }
}

// Heavy stress for the window machinery: single huge classes with weights
// pressed against the cost cap and a deliberately small leftover pool, at
// larger k than the pipelines use. Every window outcome (drop or swap) is
// re-checked by the assertions inside reduce_classes; this drives many
// multi-window classes through them.
TEST_CASE("window stress at larger k") {
  std::uint64_t state = 0xabcdef;
  long long windows_with_swaps = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int k = 3 + static_cast<int>(splitmix64(state) % 4);  // 3..6
    const ColorSet colors{3 * k - 1};
    const int s_size = static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(k));
    const int class_size = 4 + static_cast<int>(splitmix64(state) % 10);
    const int n = s_size + class_size;

    Graph g(n);  // edgeless: one big stable class plus singleton classes
    Template t = empty_template(n);
    std::vector<std::vector<int>> partition;
    for (int v = 0; v < s_size; ++v) {
      t.precolor[v] = v + 1;  // distinct colors, trivially proper
      partition.push_back({v});
    }
    std::vector<int> big;
    int budget = 2 * k * k - 1 - k * s_size;
    for (int v = s_size; v < n; ++v) {
      big.push_back(v);
      const int heavy = k - 1 - static_cast<int>(splitmix64(state) % 2);
      const int size = std::min(heavy, budget);
      for (int col = 0; col < size; ++col)
        t.forbidden[v].push_back(static_cast<int>(
            (splitmix64(state) % static_cast<std::uint64_t>(colors.size)) + 1));
      std::sort(t.forbidden[v].begin(), t.forbidden[v].end());
      t.forbidden[v].erase(std::unique(t.forbidden[v].begin(), t.forbidden[v].end()),
                           t.forbidden[v].end());
      budget -= static_cast<int>(t.forbidden[v].size());
    }
    partition.push_back(big);

    const ReductionState st = reduce_classes(g, t, partition, k, colors);
    CHECK(st.trace.all_ok());
    for (const StageTrace& stage : st.trace.stages())
      for (const auto& [key, value] : stage.values)
        if (key == "window_swaps") windows_with_swaps += value;
  }
  // The swap case is rare; what matters is that every stressed run passed
  // the internal checks regardless of which window case fired.
  CHECK(windows_with_swaps >= 0);
}

TEST_CASE("reduction state invariants on random instances") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const int k = 1 + static_cast<int>(seed % 3);
    const auto inst = testgen::random_extension_instance(k, true, seed * 7919);
    const ReductionState st =
        reduce_classes(inst.graph, inst.tmpl, inst.partition, inst.k, inst.colors);
    CAPTURE(seed);
    CHECK(st.trace.all_ok());
    CHECK(st.p <= st.t - 1);
    CHECK(st.t_prime >= 1);
    int q_total = 0;
    long long excess = 0;
    for (const ClassReduction& cls : st.classes) {
      CHECK(cls.q >= 0);
      CHECK(cls.q <= cls.p);
      CHECK(cls.x < inst.k);
      if (cls.t == 0) CHECK(cls.x >= 0);
      CHECK(static_cast<int>(cls.parts.size()) == cls.t + 1);
      int reduced_weight = 0;
      std::set<int> colors_used;
      for (int v : cls.reduced) {
        reduced_weight += st.weight_of(v);
        CHECK(st.c1[static_cast<std::size_t>(v)] != 0);
        colors_used.insert(st.c1[static_cast<std::size_t>(v)]);
      }
      CHECK(reduced_weight >= cls.q * inst.k);
      CHECK(static_cast<int>(colors_used.size()) <= cls.q);
      q_total += cls.q;
      excess += cls.x;
    }
    CHECK(q_total == st.q);
    CHECK(static_cast<long long>(inst.k) * st.t_prime > excess);
    // c1 respects the template where assigned.
    for (int v = 0; v < st.graph.vertex_count(); ++v) {
      const int col = st.c1[static_cast<std::size_t>(v)];
      if (col == 0) continue;
      if (st.tmpl.precolor[v] != 0) {
        CHECK(col == st.tmpl.precolor[v]);
      } else {
        CHECK_FALSE(std::binary_search(st.tmpl.forbidden[v].begin(),
                                       st.tmpl.forbidden[v].end(), col));
      }
    }
  }
}
