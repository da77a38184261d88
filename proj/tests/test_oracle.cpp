#include <doctest.h>

#include "chromcon/catalog.hpp"
#include "chromcon/generators.hpp"
#include "chromcon/oracle.hpp"

using namespace chromcon;

TEST_CASE("K7 satisfies the strong guarantee at k=2") {
  const auto out = theorem_oracle(complete_graph(7), 2, ExtractVariant::strong);
  CHECK(out.status == OracleStatus::holds);
  CHECK(out.chi == 7);
  CHECK(out.subgraph.size() == 7);
}

TEST_CASE("C5 at k=1 is below the chi floor") {
  const auto out = theorem_oracle(cycle_graph(5), 1, ExtractVariant::strong);
  CHECK(out.status == OracleStatus::vacuous);
}

TEST_CASE("the 5-wheel qualifies at k=1") {
  const auto out = theorem_oracle(wheel_graph(5), 1, ExtractVariant::strong);
  CHECK(out.status == OracleStatus::holds);
  CHECK(out.subgraph.size() >= 4);
}

TEST_CASE("subgraph search budget reports instead of answering") {
  SubgraphBudget tiny;
  tiny.max_subsets = 2;
  // Edgeless graph: nothing ever qualifies, so the scan must hit the cap.
  CHECK_THROWS_AS(find_connected_chromatic_subgraph(Graph(6), 2, 3, 0, tiny),
                  BudgetExhausted);
}

TEST_CASE("trees witness the k=1, m=3 lower bound") {
  // Forests have chi <= 2 and no 2-connected subgraph at all; any graph of
  // chromatic number 3 owns an odd cycle, which is one.
  std::vector<Graph> catalog;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : all_graphs(n)) catalog.push_back(g);
  const auto records = empirical_g(1, 3, catalog);
  bool witness_at_2 = false;
  for (const GBoundRecord& rec : records) {
    CHECK_FALSE(rec.upper_bound_violation);
    if (rec.n == 2 && rec.verdict == GBoundRecord::Verdict::lower_bound_witness)
      witness_at_2 = true;
    if (rec.n >= 3) CHECK(rec.verdict == GBoundRecord::Verdict::upper_bound_consistent);
  }
  CHECK(witness_at_2);
}

TEST_CASE("k=2 witnesses reach exactly chromatic level 4 on small graphs") {
  // Graphs without any 3-connected subgraph exist with chromatic number up
  // to 4 (so forcing one takes chromatic number at least 5), and every
  // graph on <= 8 vertices with chromatic number >= 5 contains one.
  std::vector<Graph> catalog;
  for (int n = 1; n <= 8; ++n)
    for (Graph& g : all_graphs(n)) catalog.push_back(std::move(g));
  const auto records = empirical_g(2, 2, catalog);
  for (const GBoundRecord& rec : records) {
    CHECK_FALSE(rec.upper_bound_violation);
    if (rec.n <= 4)
      CHECK(rec.verdict == GBoundRecord::Verdict::lower_bound_witness);
    else
      CHECK(rec.verdict == GBoundRecord::Verdict::upper_bound_consistent);
  }
}

TEST_CASE("K4 witnesses the k=1, m=5 lower bound") {
  std::vector<Graph> catalog{complete_graph(4)};
  const auto records = empirical_g(1, 5, catalog);
  REQUIRE(records.size() == 1);
  CHECK(records[0].n == 4);
  CHECK(records[0].verdict == GBoundRecord::Verdict::lower_bound_witness);
  CHECK_FALSE(records[0].upper_bound_violation);  // 4 < max(5+0, 4) = 5
}
