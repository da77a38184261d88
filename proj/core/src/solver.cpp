#include "chromcon/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace chromcon {

namespace {

constexpr int kMaxColors = 64;

std::uint64_t color_bit(int color) { return std::uint64_t{1} << (color - 1); }

struct Searcher {
  const Graph& g;
  int n;
  int num_colors;
  bool symmetric;  // empty template: colors are interchangeable
  std::int64_t nodes_left;

  std::vector<std::uint64_t> candidates;      // per-vertex remaining domain
  std::vector<std::uint64_t> neighbor_colors; // colors present on colored neighbors
  std::vector<int> assigned;                  // 0 = uncolored
  int uncolored;

  struct TrailEntry {
    int vertex;
    std::uint64_t old_candidates;
    std::uint64_t old_neighbor_colors;
  };
  std::vector<TrailEntry> trail;

  bool assign(int v, int color) {
    assigned[v] = color;
    --uncolored;
    bool ok = true;
    std::uint64_t m = g.neighbor_mask(v);
    while (m) {
      const int u = std::countr_zero(m);
      m &= m - 1;
      if (assigned[u] != 0) continue;
      trail.push_back({u, candidates[u], neighbor_colors[u]});
      neighbor_colors[u] |= color_bit(color);
      candidates[u] &= ~color_bit(color);
      if (candidates[u] == 0) ok = false;
    }
    return ok;
  }

  void undo(std::size_t trail_mark, int v) {
    while (trail.size() > trail_mark) {
      const TrailEntry& e = trail.back();
      candidates[e.vertex] = e.old_candidates;
      neighbor_colors[e.vertex] = e.old_neighbor_colors;
      trail.pop_back();
    }
    assigned[v] = 0;
    ++uncolored;
  }

  // Max saturation (distinct colors on colored neighbors), ties by index.
  int pick_vertex() const {
    int best = -1, best_sat = -1;
    for (int v = 0; v < n; ++v) {
      if (assigned[v] != 0) continue;
      const int sat = std::popcount(neighbor_colors[v]);
      if (sat > best_sat) {
        best_sat = sat;
        best = v;
      }
    }
    return best;
  }

  bool search(int max_used) {
    if (uncolored == 0) return true;
    if (--nodes_left < 0) throw BudgetExhausted("coloring search: node budget exhausted");
    const int v = pick_vertex();
    std::uint64_t options = candidates[v];
    if (symmetric && max_used < num_colors) {
      // A fresh color beyond max_used+1 is interchangeable with max_used+1.
      options &= (std::uint64_t{1} << (max_used + 1)) - 1;
    }
    while (options) {
      const int color = std::countr_zero(options) + 1;
      options &= options - 1;
      const std::size_t mark = trail.size();
      if (assign(v, color) && search(std::max(max_used, color))) return true;
      undo(mark, v);
    }
    return false;
  }
};

std::optional<Coloring> solve(const Graph& g, const Template& t, const ColorSet& c,
                              const SolveBudget& budget) {
  const int n = g.vertex_count();
  if (c.size > kMaxColors)
    throw std::invalid_argument("coloring search: more than 64 colors unsupported");
  if (n == 0) return Coloring{};

  bool empty_template = true;
  for (int v = 0; v < n && empty_template; ++v)
    if (t.precolor[v] != 0 || !t.forbidden[v].empty()) empty_template = false;

  Searcher s{g,
             n,
             c.size,
             empty_template,
             budget.max_nodes,
             std::vector<std::uint64_t>(static_cast<std::size_t>(n)),
             std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0),
             std::vector<int>(static_cast<std::size_t>(n), 0),
             n,
             {}};

  const std::uint64_t full =
      (c.size == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << c.size) - 1);
  for (int v = 0; v < n; ++v) {
    if (t.precolor[v] != 0) {
      s.candidates[v] = color_bit(t.precolor[v]);
    } else {
      std::uint64_t dom = full;
      for (int f : t.forbidden[v]) dom &= ~color_bit(f);
      s.candidates[v] = dom;
    }
    if (s.candidates[v] == 0) return std::nullopt;
  }

  int max_used = 0;
  if (empty_template) {
    // Fix one greedy maximal clique to colors 1..q; precolored vertices
    // would already break the color symmetry, so this only runs here.
    const VertexSet clique = greedy_maximal_clique(g);
    if (static_cast<int>(clique.size()) > c.size) return std::nullopt;
    for (std::size_t i = 0; i < clique.size(); ++i) {
      if (!s.assign(clique[i], static_cast<int>(i) + 1)) return std::nullopt;
      max_used = static_cast<int>(i) + 1;
    }
  } else {
    // Place the forced precolored assignments before branching.
    for (int v = 0; v < n; ++v)
      if (t.precolor[v] != 0 && !s.assign(v, t.precolor[v])) return std::nullopt;
    max_used = c.size;
  }

  if (!s.search(max_used)) return std::nullopt;
  Coloring f;
  f.colors = s.assigned;
  return f;
}

}  // namespace

bool is_proper(const Graph& g, const Coloring& f) {
  const int n = g.vertex_count();
  if (static_cast<int>(f.colors.size()) != n) return false;
  for (int v = 0; v < n; ++v)
    if (f.colors[v] < 1) return false;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) && f.colors[u] == f.colors[v]) return false;
  return true;
}

bool is_proper(const Graph& g, const Coloring& f, const ColorSet& c) {
  if (!is_proper(g, f)) return false;
  for (int col : f.colors)
    if (!c.contains(col)) return false;
  return true;
}

VertexSet greedy_maximal_clique(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  VertexSet clique;
  for (int v : order) {
    bool joined = true;
    for (int u : clique)
      if (!g.adjacent(u, v)) {
        joined = false;
        break;
      }
    if (joined) clique.push_back(v);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

int chromatic_number(const Graph& g, const SolveBudget& budget) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  const int lb = static_cast<int>(greedy_maximal_clique(g).size());
  for (int m = lb; m <= n; ++m)
    if (find_coloring(g, ColorSet{m}, budget)) return m;
  return n;  // unreachable: m = n always colors
}

std::optional<Coloring> find_coloring(const Graph& g, const ColorSet& c,
                                      const SolveBudget& budget) {
  if (c.size < 0) throw std::invalid_argument("find_coloring: negative color count");
  return solve(g, empty_template(g.vertex_count()), c, budget);
}

std::optional<Coloring> find_respecting_coloring(const Graph& g, const Template& t,
                                                 const ColorSet& c, const SolveBudget& budget) {
  validate_template(g, t, c);
  return solve(g, t, c, budget);
}

}  // namespace chromcon
