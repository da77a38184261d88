#ifndef CHROMCON_TEMPLATES_HPP
#define CHROMCON_TEMPLATES_HPP

#include <vector>

#include "chromcon/coloring.hpp"
#include "chromcon/graph.hpp"

namespace chromcon {

/// Precoloring template (S, c, F) on a graph: a set S of precolored
/// vertices with a proper coloring c of G[S], plus a forbidden color set
/// F(v) for every uncolored vertex.
struct Template {
  /// precolor[v] = color of v if precolored, 0 otherwise.
  std::vector<int> precolor;
  /// forbidden[v] = sorted forbidden colors; must be empty for precolored v.
  std::vector<std::vector<int>> forbidden;

  bool is_precolored(int v) const { return precolor[v] != 0; }
  int vertex_count() const { return static_cast<int>(precolor.size()); }
  VertexSet precolored_vertices() const;
  std::vector<int> precolored_colors() const;  // parallel to precolored_vertices()

  bool operator==(const Template&) const = default;
};

Template empty_template(int n);

/// Checks the shape invariants: sizes match g, colors lie in c, the
/// precoloring is proper on G[S], and F is only carried by uncolored
/// vertices. Throws std::invalid_argument with a diagnostic (naming the
/// offending vertex pair for properness violations).
void validate_template(const Graph& g, const Template& t, const ColorSet& c);

/// cost_k(T) = k|S| + sum of |F(v)| over uncolored v.
/// Additive over disjoint vertex-set restrictions.
int k_cost(const Template& t, int k);

/// T_A on G[A] (local vertex ids follow induced_subgraph's order).
Template restrict_template(const Graph& g, const Template& t, const VertexSet& a);

/// Coloring f respects T: f agrees with the precoloring on S and avoids
/// F(v) everywhere else. Direct definition check.
bool respects(const Graph& g, const Template& t, const Coloring& f);

}  // namespace chromcon

#endif
