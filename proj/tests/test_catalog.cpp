#include <doctest.h>

#include <numeric>

#include "chromcon/catalog.hpp"
#include "chromcon/generators.hpp"

using namespace chromcon;

TEST_CASE("catalog counts match the known sequences up to 7 vertices") {
  // Unlabeled graphs: 1, 1, 2, 4, 11, 34, 156, 1044; connected ones:
  // 1, 1, 1, 2, 6, 21, 112, 853.
  const int expected_all[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  const int expected_connected[] = {1, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 0; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(static_cast<int>(all_graphs(n).size()) == expected_all[n]);
    CHECK(static_cast<int>(connected_graphs(n).size()) == expected_connected[n]);
  }
}

TEST_CASE("canonical code is invariant under relabeling") {
  std::uint64_t state = 77;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(splitmix64(state) % 7);
    const Graph g = random_graph(n, 0.5, splitmix64(state));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n; i > 1; --i)
      std::swap(perm[i - 1], perm[splitmix64(state) % static_cast<std::uint64_t>(i)]);
    Graph relabeled(n);
    for (const auto& [u, v] : g.edges()) relabeled.add_edge(perm[u], perm[v]);
    CHECK(canonical_code(g) == canonical_code(relabeled));
  }
}

TEST_CASE("canonical codes separate non-isomorphic graphs") {
  CHECK(canonical_code(path_graph(4)) != canonical_code(star_graph(4)));
  CHECK(canonical_code(cycle_graph(5)) != canonical_code(path_graph(5)));
}

TEST_CASE("code round-trip") {
  const Graph g = petersen_graph();
  const std::uint64_t code = canonical_code(g);
  const Graph back = graph_from_code(10, code);
  CHECK(canonical_code(back) == code);
  CHECK(back.edge_count() == g.edge_count());
}
