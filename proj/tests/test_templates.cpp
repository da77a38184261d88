#include <doctest.h>

#include <stdexcept>

#include "chromcon/generators.hpp"
#include "chromcon/templates.hpp"

using namespace chromcon;

TEST_CASE("k-cost of the empty template is zero") {
  for (int k : {1, 2, 5}) CHECK(k_cost(empty_template(6), k) == 0);
}

TEST_CASE("k-cost adds k per precolored vertex and one per forbidden color") {
  Template t = empty_template(4);
  t.precolor[0] = 1;
  t.precolor[2] = 3;
  t.forbidden[1] = {2, 4};
  t.forbidden[3] = {1};
  CHECK(k_cost(t, 2) == 2 * 2 + 3);
  CHECK(k_cost(t, 1) == 1 * 2 + 3);
}

TEST_CASE("k-cost is additive over disjoint restrictions") {
  std::uint64_t state = 15;
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(8, 0.4, splitmix64(state));
    Template t = empty_template(8);
    // Template with arbitrary shape on an 8-vertex graph.
    t.precolor[1] = 2;
    t.precolor[6] = 1;
    t.forbidden[0] = {1};
    t.forbidden[3] = {2, 3};
    t.forbidden[7] = {1, 4};
    const std::uint64_t mask = splitmix64(state) % 256;
    VertexSet a, b;
    for (int v = 0; v < 8; ++v) ((mask >> v) & 1 ? a : b).push_back(v);
    VertexSet both;
    both.insert(both.end(), a.begin(), a.end());
    both.insert(both.end(), b.begin(), b.end());
    for (int k : {1, 2, 3}) {
      const int lhs = k_cost(restrict_template(g, t, a), k) +
                      k_cost(restrict_template(g, t, b), k);
      CHECK(lhs == k_cost(restrict_template(g, t, both), k));
    }
  }
}

TEST_CASE("validation rejects adjacent equal precolors with a diagnostic") {
  const Graph k3 = complete_graph(3);
  Template t = empty_template(3);
  t.precolor[0] = 1;
  t.precolor[2] = 1;
  CHECK_THROWS_WITH_AS(validate_template(k3, t, ColorSet{3}),
                       doctest::Contains("adjacent vertices 0 and 2"), std::invalid_argument);
}

TEST_CASE("validation rejects out-of-palette and misplaced entries") {
  const Graph g = path_graph(3);
  Template bad_color = empty_template(3);
  bad_color.precolor[0] = 5;
  CHECK_THROWS_AS(validate_template(g, bad_color, ColorSet{3}), std::invalid_argument);

  Template bad_forbidden = empty_template(3);
  bad_forbidden.precolor[1] = 1;
  bad_forbidden.forbidden[1] = {2};
  CHECK_THROWS_AS(validate_template(g, bad_forbidden, ColorSet{3}), std::invalid_argument);

  Template bad_range = empty_template(3);
  bad_range.forbidden[0] = {4};
  CHECK_THROWS_AS(validate_template(g, bad_range, ColorSet{3}), std::invalid_argument);
}

TEST_CASE("restriction keeps precolors and forbidden sets of the kept vertices") {
  const Graph c5 = cycle_graph(5);
  Template t = empty_template(5);
  t.precolor[1] = 2;
  t.forbidden[0] = {1};
  t.forbidden[3] = {2, 3};
  const Template r = restrict_template(c5, t, {0, 1, 3});
  CHECK(r.precolor == std::vector<int>{0, 2, 0});
  CHECK(r.forbidden[0] == std::vector<int>{1});
  CHECK(r.forbidden[2] == std::vector<int>{2, 3});
}
