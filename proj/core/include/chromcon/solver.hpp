#ifndef CHROMCON_SOLVER_HPP
#define CHROMCON_SOLVER_HPP

#include <optional>

#include "chromcon/budget.hpp"
#include "chromcon/coloring.hpp"
#include "chromcon/graph.hpp"
#include "chromcon/templates.hpp"

namespace chromcon {

/// Exact chromatic number by branch and bound: greedy clique lower bound,
/// saturation-ordered branching, color symmetry breaking. Returns 0 for the
/// empty graph. Throws BudgetExhausted when the node budget runs out.
int chromatic_number(const Graph& g, const SolveBudget& budget = {});

/// Some proper coloring using only colors of c, if one exists.
/// Deterministic under the fixed saturation/vertex-index order.
std::optional<Coloring> find_coloring(const Graph& g, const ColorSet& c,
                                      const SolveBudget& budget = {});

/// Some proper coloring respecting t, if one exists. Backtracking over
/// per-vertex domains (singleton on precolored vertices, palette minus
/// F(v) elsewhere) with forward checking; search stops a branch as soon
/// as a domain empties. Clique-based symmetry breaking is enabled only
/// for the fully empty template, where colors are interchangeable.
std::optional<Coloring> find_respecting_coloring(const Graph& g, const Template& t,
                                                 const ColorSet& c,
                                                 const SolveBudget& budget = {});

/// Greedy maximal clique (highest degree first, ties by index).
VertexSet greedy_maximal_clique(const Graph& g);

}  // namespace chromcon

#endif
