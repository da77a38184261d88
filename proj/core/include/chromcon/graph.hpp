#ifndef CHROMCON_GRAPH_HPP
#define CHROMCON_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace chromcon {

/// Simple undirected graph on vertices 0..n-1, no loops, no parallel edges.
/// The whole toolkit targets exhaustive desk-scale search, so the vertex
/// count is capped at 64 and adjacency rows are single bit masks.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  int edge_count() const;

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }

  int degree(int v) const;
  std::uint64_t neighbor_mask(int v) const { return adj_[v]; }
  std::vector<int> neighbors(int v) const;

  /// Edges as (u, v) pairs with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// A set of vertices of some ambient graph, kept sorted and duplicate-free.
using VertexSet = std::vector<int>;

/// Sorted copy with duplicates removed; throws if any member is out of range.
VertexSet normalize_vertex_set(const Graph& g, const VertexSet& s);

/// True iff no two members of s are adjacent in g.
bool is_stable_set(const Graph& g, const VertexSet& s);

struct InducedSubgraph {
  Graph graph;
  /// vertices[local] = vertex id in the parent graph (ascending).
  std::vector<int> vertices;
};

/// G[s]: local vertex i corresponds to the i-th smallest member of s.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

}  // namespace chromcon

#endif
