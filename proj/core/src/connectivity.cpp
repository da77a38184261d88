#include "chromcon/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace chromcon {

namespace {

std::uint64_t component_of(const Graph& g, int start, std::uint64_t alive) {
  std::uint64_t seen = std::uint64_t{1} << start;
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f) {
      const int v = std::countr_zero(f);
      f &= f - 1;
      next |= g.neighbor_mask(v) & alive;
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen & alive;
}

bool connected_within(const Graph& g, std::uint64_t alive) {
  if (alive == 0) return true;
  const int start = std::countr_zero(alive);
  return component_of(g, start, alive) == alive;
}

// Max count of internally vertex-disjoint s-t paths, capped at `cap`.
// Split digraph: node 2v = v_in, 2v+1 = v_out; v_in->v_out has capacity 1,
// each edge (a,b) contributes a_out->b_in and b_out->a_in of capacity cap.
int disjoint_path_count(const Graph& g, int s, int t, int cap) {
  const int n = g.vertex_count();
  struct Arc {
    int to;
    int flow;
    int capacity;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(static_cast<std::size_t>(2 * n));
  auto add_arc = [&](int from, int to, int capacity) {
    out[from].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({to, 0, capacity});
    out[to].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({from, 0, 0});
  };
  for (int v = 0; v < n; ++v) add_arc(2 * v, 2 * v + 1, 1);
  for (const auto& [a, b] : g.edges()) {
    add_arc(2 * a + 1, 2 * b, cap);
    add_arc(2 * b + 1, 2 * a, cap);
  }

  const int source = 2 * s + 1, sink = 2 * t;
  int flow = 0;
  std::vector<int> parent_arc(static_cast<std::size_t>(2 * n));
  while (flow < cap) {
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    std::vector<int> queue{source};
    parent_arc[source] = -2;
    bool reached = false;
    for (std::size_t qi = 0; qi < queue.size() && !reached; ++qi) {
      const int u = queue[qi];
      for (int ai : out[u]) {
        const Arc& a = arcs[ai];
        if (a.flow < a.capacity && parent_arc[a.to] == -1) {
          parent_arc[a.to] = ai;
          if (a.to == sink) {
            reached = true;
            break;
          }
          queue.push_back(a.to);
        }
      }
    }
    if (!reached) break;
    for (int v = sink; v != source;) {
      const int ai = parent_arc[v];
      arcs[ai].flow += 1;
      arcs[ai ^ 1].flow -= 1;
      v = arcs[ai ^ 1].to;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  return connected_within(g, all);
}

bool vertex_connectivity_at_least(const Graph& g, int kappa) {
  const int n = g.vertex_count();
  if (n <= kappa) return false;
  if (kappa <= 0) return true;
  bool complete = true;
  for (int u = 0; u < n && complete; ++u)
    for (int v = u + 1; v < n && complete; ++v)
      if (!g.adjacent(u, v)) complete = false;
  if (complete) return true;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v) && disjoint_path_count(g, u, v, kappa) < kappa) return false;
  return true;
}

namespace {

std::vector<VertexSet> components_of(const Graph& g, const std::vector<bool>& removed) {
  const int n = g.vertex_count();
  std::uint64_t alive = 0;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) alive |= std::uint64_t{1} << v;
  std::vector<VertexSet> comps;
  while (alive) {
    const int start = std::countr_zero(alive);
    const std::uint64_t comp = component_of(g, start, alive);
    VertexSet verts;
    for (std::uint64_t m = comp; m;) {
      verts.push_back(std::countr_zero(m));
      m &= m - 1;
    }
    comps.push_back(std::move(verts));
    alive &= ~comp;
  }
  return comps;
}

// Lexicographically least nonempty proper union of components, as a sorted
// vertex list. Components arrive sorted by least vertex.
VertexSet least_side(const std::vector<VertexSet>& comps) {
  std::vector<bool> taken(comps.size(), false);
  VertexSet side = comps[0];
  taken[0] = true;
  std::size_t chosen = 1;
  for (std::size_t i = 1; i < comps.size(); ++i) {
    if (comps[i].front() > side.back()) break;
    VertexSet merged;
    std::merge(side.begin(), side.end(), comps[i].begin(), comps[i].end(),
               std::back_inserter(merged));
    side = std::move(merged);
    taken[i] = true;
    ++chosen;
  }
  if (chosen < comps.size()) return side;
  // Greedy swallowed everything: drop the one component whose omission
  // leaves the least list (never the component holding the least vertex).
  VertexSet best;
  for (std::size_t skip = 1; skip < comps.size(); ++skip) {
    VertexSet candidate;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (i == skip) continue;
      candidate.insert(candidate.end(), comps[i].begin(), comps[i].end());
    }
    std::sort(candidate.begin(), candidate.end());
    if (best.empty() || candidate < best) best = std::move(candidate);
  }
  return best;
}

}  // namespace

std::optional<CutsetSplit> find_cutset(const Graph& g, int max_size) {
  const int n = g.vertex_count();
  if (max_size < 0) return std::nullopt;

  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  VertexSet prefix;
  std::optional<CutsetSplit> result;

  auto try_prefix = [&]() -> bool {
    if (n - static_cast<int>(prefix.size()) < 2) return false;
    auto comps = components_of(g, removed);
    if (comps.size() < 2) return false;
    VertexSet side_a = least_side(comps);
    VertexSet side_b;
    for (const auto& comp : comps)
      for (int v : comp)
        if (!std::binary_search(side_a.begin(), side_a.end(), v)) side_b.push_back(v);
    std::sort(side_b.begin(), side_b.end());
    result = CutsetSplit{prefix, std::move(side_a), std::move(side_b)};
    return true;
  };

  // Prefix DFS visits candidate sets in lexicographic order of their
  // sorted vertex lists, so the first hit is the least cutset.
  auto dfs = [&](auto&& self, int next_min) -> bool {
    if (try_prefix()) return true;
    if (static_cast<int>(prefix.size()) >= max_size) return false;
    for (int v = next_min; v < n; ++v) {
      prefix.push_back(v);
      removed[v] = true;
      if (self(self, v + 1)) return true;
      removed[v] = false;
      prefix.pop_back();
    }
    return false;
  };

  dfs(dfs, 0);
  return result;
}

}  // namespace chromcon
