#ifndef CHROMCON_INEXTENSIBILITY_HPP
#define CHROMCON_INEXTENSIBILITY_HPP

#include <optional>

#include "chromcon/budget.hpp"
#include "chromcon/graph.hpp"
#include "chromcon/solver.hpp"
#include "chromcon/templates.hpp"

namespace chromcon {

/// A template certifying inextensibility: cost < 2k^2, every forbidden set
/// of size at most k, and no respecting coloring.
struct Witness {
  Template tmpl;
  int k = 1;
  ColorSet colors;
  int cost = 0;
};

Witness make_witness(const Graph& g, Template t, int k, ColorSet c);

/// All three witness conditions: the cost bound, the per-vertex forbidden
/// bound, and unsatisfiability via the exact solver. Budget exhaustion
/// propagates as BudgetExhausted, never as false.
bool verify_witness(const Graph& g, const Template& t, int k, const ColorSet& c,
                    const SolveBudget& budget = {});

/// Converts a witness into a good one (every |F(v)| <= k-1) while
/// preserving the cost exactly: as long as some uncolored v carries k
/// forbidden colors, v is precolored with the least color outside
/// c(S) u F(v). Requires |C| >= 3k-1, which guarantees that color exists.
Witness goodify(const Graph& g, const Witness& w);

/// Exact inextensibility certification: searches every template with
/// cost < 2k^2 and |F(v)| <= k, up to color relabeling of the precoloring
/// (restricted-growth form) and restricted to forbidden assignments that
/// are maximal within the cost budget (enlarging F preserves
/// unsatisfiability, so maximal ones decide). Returns the first witness in
/// enumeration order, or nullopt when g is extensible. Throws
/// BudgetExhausted when the candidate count exceeds the budget.
std::optional<Witness> enumerate_witness(const Graph& g, int k, const ColorSet& c,
                                         const EnumerationBudget& budget = {});

/// Number of candidate templates enumerate_witness would check.
std::int64_t count_witness_candidates(const Graph& g, int k, const ColorSet& c,
                                      std::int64_t cap);

enum class ShrinkMode { exact, heuristic };

struct MinimalInextensible {
  VertexSet vertices;  // ids in the input graph, ascending
  Graph subgraph;      // induced copy; local ids follow `vertices`
  Witness witness;     // on `subgraph`
  /// Exact mode: every single-vertex deletion was certified extensible,
  /// which certifies every proper induced subgraph (a witness on an
  /// induced subgraph extends by empty forbidden sets to a witness on any
  /// supergraph, so inextensibility is inherited upward).
  bool minimal_certified = false;
  /// Exact mode ran out of enumeration budget; the shrink stopped early
  /// and the result is only known to be inextensible.
  bool budget_exhausted = false;
  bool order_bound_ok = false;    // |H| > |C| - k + 1
  bool connectivity_ok = false;   // (k+1)-connected
};

/// Shrinks g to an inextensible induced subgraph no single vertex of which
/// can be removed. Exact mode certifies each deletion via
/// enumerate_witness; heuristic mode only tries templates derived from the
/// current witness (restriction for uncolored vertices; for a precolored u,
/// deletion with c(u) added to the forbidden sets of its uncolored
/// neighbors) and therefore may stop early. When no starting witness is
/// given, the empty template is used if chi(g) > |C|, otherwise
/// enumerate_witness runs first.
MinimalInextensible minimal_inextensible_subgraph(const Graph& g, int k, const ColorSet& c,
                                                  ShrinkMode mode,
                                                  std::optional<Witness> start = std::nullopt,
                                                  const EnumerationBudget& budget = {});

}  // namespace chromcon

#endif
