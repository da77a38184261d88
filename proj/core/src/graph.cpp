#include "chromcon/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace chromcon {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n > 0 ? n : 0), 0) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  if (n > kMaxVertices)
    throw std::invalid_argument("graph: vertex count " + std::to_string(n) +
                                " exceeds supported maximum " + std::to_string(kMaxVertices));
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("add_edge: loops are not allowed");
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += std::popcount(adj_[v]);
  return total / 2;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  std::uint64_t m = adj_[v];
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

VertexSet normalize_vertex_set(const Graph& g, const VertexSet& s) {
  VertexSet out = s;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (int v : out)
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("vertex set: member " + std::to_string(v) + " out of range");
  return out;
}

bool is_stable_set(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  VertexSet verts = normalize_vertex_set(g, s);
  Graph sub(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (g.adjacent(verts[i], verts[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
  return {std::move(sub), std::move(verts)};
}

}  // namespace chromcon
