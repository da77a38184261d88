#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "chromcon/generators.hpp"
#include "chromcon/graph_io.hpp"

using namespace chromcon;

TEST_CASE("graph6 encodes known small graphs") {
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(cycle_graph(5)) == "Dhc");
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(to_graph6(Graph(1)) == "@");
}

TEST_CASE("graph6 round-trips bit-exactly") {
  std::uint64_t state = 7;
  for (int n : {0, 1, 2, 5, 13, 40, 62, 63, 64}) {
    const Graph g = random_graph(n, 0.37, splitmix64(state));
    const std::string line = to_graph6(g);
    CHECK(from_graph6(line) == g);
    CHECK(to_graph6(from_graph6(line)) == line);
  }
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("D"), std::invalid_argument);     // truncated bits
  CHECK_THROWS_AS(from_graph6("C~~"), std::invalid_argument);   // trailing bytes
  CHECK_THROWS_AS(from_graph6("C\x07"), std::invalid_argument); // byte out of range
}

TEST_CASE("edge list round-trips") {
  const Graph g = petersen_graph();
  const std::string text = to_edge_list(g);
  CHECK(from_edge_list(text) == g);
  CHECK(to_edge_list(from_edge_list(text)) == text);
}

TEST_CASE("edge list rejects malformed input") {
  CHECK_THROWS_AS(from_edge_list(""), std::invalid_argument);
  CHECK_THROWS_AS(from_edge_list("3 2\n0 1\n"), std::invalid_argument);      // truncated
  CHECK_THROWS_AS(from_edge_list("3 1\n0 1\n2 2\n"), std::invalid_argument); // trailing
  CHECK_THROWS_AS(from_edge_list("3 1\n0 5\n"), std::invalid_argument);      // out of range
}

TEST_CASE("graph6 line reader skips blanks") {
  std::istringstream in("C~\n\nDhc\n");
  const auto graphs = read_graph6_lines(in);
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[0] == complete_graph(4));
  CHECK(graphs[1] == cycle_graph(5));
}
