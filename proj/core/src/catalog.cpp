#include "chromcon/catalog.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "chromcon/connectivity.hpp"

namespace chromcon {

namespace {

struct CodeSearch {
  const Graph& g;
  int n;
  int total_bits;
  std::uint64_t best;
  std::vector<int> perm;
  std::uint64_t used = 0;

  void dfs(int pos, std::uint64_t prefix, int prefix_bits) {
    if (pos == n) {
      best = std::min(best, prefix);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1) continue;
      std::uint64_t column = 0;
      for (int i = 0; i < pos; ++i) column = (column << 1) | (g.adjacent(perm[i], v) ? 1 : 0);
      const std::uint64_t next_prefix = (prefix << pos) | column;
      const int next_bits = prefix_bits + pos;
      if (next_prefix > (best >> (total_bits - next_bits))) continue;
      perm.push_back(v);
      used |= std::uint64_t{1} << v;
      dfs(pos + 1, next_prefix, next_bits);
      used &= ~(std::uint64_t{1} << v);
      perm.pop_back();
    }
  }
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 11) throw std::invalid_argument("canonical_code: supported up to 11 vertices");
  if (n <= 1) return 0;
  CodeSearch search{g, n, n * (n - 1) / 2, ~std::uint64_t{0}, {}, 0};
  search.perm.reserve(static_cast<std::size_t>(n));
  search.dfs(0, 0, 0);
  return search.best;
}

Graph graph_from_code(int n, std::uint64_t code) {
  Graph g(n);
  const int total = n * (n - 1) / 2;
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((code >> (total - 1 - bit)) & 1) g.add_edge(i, j);
  return g;
}

std::vector<Graph> all_graphs(int n) {
  if (n < 0) throw std::invalid_argument("all_graphs: negative order");
  if (n > 11) throw std::invalid_argument("all_graphs: supported up to 11 vertices");
  std::vector<std::uint64_t> level{0};  // the empty graph
  for (int m = 1; m <= n; ++m) {
    std::unordered_set<std::uint64_t> next;
    for (std::uint64_t parent_code : level) {
      const Graph parent = graph_from_code(m - 1, parent_code);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
        Graph child(m);
        for (const auto& [u, v] : parent.edges()) child.add_edge(u, v);
        for (int v = 0; v < m - 1; ++v)
          if ((mask >> v) & 1) child.add_edge(v, m - 1);
        next.insert(canonical_code(child));
      }
    }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (std::uint64_t code : level) out.push_back(graph_from_code(n, code));
  return out;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace chromcon
