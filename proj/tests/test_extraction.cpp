#include <doctest.h>

#include <stdexcept>

#include "chromcon/connectivity.hpp"
#include "chromcon/extraction.hpp"
#include "chromcon/generators.hpp"
#include "chromcon/solver.hpp"

using namespace chromcon;

TEST_CASE("chi floors per variant") {
  CHECK(extract_chi_floor(1, ExtractVariant::strong) == 4);
  CHECK(extract_chi_floor(2, ExtractVariant::strong) == 7);
  CHECK(extract_chi_floor(3, ExtractVariant::strong) == 10);
  CHECK(extract_chi_floor(1, ExtractVariant::weak) == 3);
  CHECK(extract_chi_floor(2, ExtractVariant::weak) == 7);
}

TEST_CASE("K7 is its own certificate at k=2") {
  const auto out = extract_subgraph(complete_graph(7), 2, ExtractVariant::strong,
                                    ShrinkMode::heuristic);
  CHECK(out.vertices.size() == 7);
  CHECK(out.input_chi == 7);
  CHECK(out.subgraph_chi == 7);
  CHECK(out.connectivity_ok);
  CHECK(out.order_ok);      // 7 > 7 - 2
  CHECK(out.chromatic_ok);  // 7 >= 7 - 4 + 2
  CHECK(out.all_guarantees_ok);
}

TEST_CASE("the 5-wheel extracts itself at k=1") {
  const Graph w5 = wheel_graph(5);  // chi = 4
  const auto out = extract_subgraph(w5, 1, ExtractVariant::strong, ShrinkMode::exact);
  CHECK(out.input_chi == 4);
  CHECK(out.vertices.size() == 6);
  CHECK(out.certified_minimal);
  CHECK(out.connectivity_ok);
  CHECK(out.order_ok);
  CHECK(out.subgraph_chi >= 4);
  CHECK(out.all_guarantees_ok);
}

TEST_CASE("K4 plus pendant extracts the K4") {
  Graph g(5);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
  g.add_edge(3, 4);
  for (ShrinkMode mode : {ShrinkMode::exact, ShrinkMode::heuristic}) {
    const auto out = extract_subgraph(g, 1, ExtractVariant::strong, mode);
    CHECK(out.vertices == VertexSet{0, 1, 2, 3});
    CHECK(out.all_guarantees_ok);
    CHECK(verify_witness(out.subgraph, out.witness.tmpl, 1, ColorSet{out.palette}));
  }
}

TEST_CASE("hypothesis violations are input errors") {
  CHECK_THROWS_AS(extract_subgraph(cycle_graph(5), 1, ExtractVariant::strong,
                                   ShrinkMode::heuristic),
                  std::invalid_argument);  // chi = 3 < 4
  CHECK_THROWS_AS(extract_subgraph(complete_graph(6), 2, ExtractVariant::weak,
                                   ShrinkMode::heuristic),
                  std::invalid_argument);  // chi = 6 < 4k-1 = 7
}

TEST_CASE("weak variant on K7") {
  const auto out = extract_subgraph(complete_graph(7), 2, ExtractVariant::weak,
                                    ShrinkMode::heuristic);
  CHECK(out.subgraph_chi >= out.input_chi - 2 * 2 + 1);
  CHECK(out.all_guarantees_ok);
}
