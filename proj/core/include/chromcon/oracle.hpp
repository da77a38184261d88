#ifndef CHROMCON_ORACLE_HPP
#define CHROMCON_ORACLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "chromcon/budget.hpp"
#include "chromcon/extraction.hpp"
#include "chromcon/graph.hpp"

namespace chromcon {

/// First (in descending-size, lexicographic order) induced subgraph that is
/// kappa-connected with chromatic number >= min_chi and more than min_order
/// vertices. Induced search suffices: deleting edges never helps either
/// property. Counts examined subsets against the budget.
std::optional<VertexSet> find_connected_chromatic_subgraph(const Graph& g, int kappa,
                                                           int min_chi, int min_order,
                                                           const SubgraphBudget& budget = {});

enum class OracleStatus { holds, vacuous, fails };

struct OracleOutcome {
  OracleStatus status = OracleStatus::vacuous;
  int chi = 0;
  VertexSet subgraph;  // a qualifying subgraph when status == holds
};

/// Brute-force check of the extraction guarantee on one graph: vacuous when
/// chi(g) is below the variant's floor, otherwise searches for an induced
/// (k+1)-connected subgraph with more than chi-k vertices and the variant's
/// chromatic guarantee. `fails` marks a potential counterexample.
OracleOutcome theorem_oracle(const Graph& g, int k, ExtractVariant variant,
                             const SubgraphBudget& budget = {});

struct GBoundRecord {
  int k = 0;
  int m = 0;
  int n = 0;  // chromatic level the record speaks about
  std::optional<std::string> witness_graph6;
  enum class Verdict { lower_bound_witness, upper_bound_consistent } verdict =
      Verdict::upper_bound_consistent;
  /// Set when a graph with chi >= max(m+2k-2, ceil((3+1/16)k)) lacks a
  /// qualifying subgraph; must never happen.
  bool upper_bound_violation = false;
};

/// Scans a catalog for lower-bound witnesses: graphs whose chromatic number
/// equals the record level yet contain no (k+1)-connected subgraph of
/// chromatic number >= m. One record per chromatic level present.
std::vector<GBoundRecord> empirical_g(int k, int m, const std::vector<Graph>& catalog,
                                      const SubgraphBudget& budget = {});

}  // namespace chromcon

#endif
