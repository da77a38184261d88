#include "chromcon/inextensibility.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "chromcon/connectivity.hpp"

namespace chromcon {

Witness make_witness(const Graph& g, Template t, int k, ColorSet c) {
  validate_template(g, t, c);
  if (k < 1) throw std::invalid_argument("witness: need k >= 1");
  Witness w{std::move(t), k, c, 0};
  w.cost = k_cost(w.tmpl, k);
  if (w.cost >= 2 * k * k) throw std::invalid_argument("witness: cost must stay below 2k^2");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (static_cast<int>(w.tmpl.forbidden[v].size()) > k)
      throw std::invalid_argument("witness: vertex " + std::to_string(v) +
                                  " has more than k forbidden colors");
  return w;
}

bool verify_witness(const Graph& g, const Template& t, int k, const ColorSet& c,
                    const SolveBudget& budget) {
  validate_template(g, t, c);
  if (k < 1) throw std::invalid_argument("verify_witness: need k >= 1");
  if (k_cost(t, k) >= 2 * k * k) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (static_cast<int>(t.forbidden[v].size()) > k) return false;
  return !find_respecting_coloring(g, t, c, budget).has_value();
}

Witness goodify(const Graph& g, const Witness& w) {
  const int k = w.k;
  if (w.colors.size < 3 * k - 1)
    throw std::invalid_argument("goodify: needs |C| >= 3k-1");
  Witness out = w;
  for (;;) {
    int mover = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (out.tmpl.precolor[v] == 0 && static_cast<int>(out.tmpl.forbidden[v].size()) >= k) {
        mover = v;
        break;
      }
    }
    if (mover < 0) break;

    // Least color outside c(S) u F(mover); the counting |S| <= 2k-2 and
    // |C| >= 3k-1 makes one available.
    std::vector<bool> blocked(static_cast<std::size_t>(out.colors.size) + 1, false);
    for (int v = 0; v < g.vertex_count(); ++v)
      if (out.tmpl.precolor[v] != 0) blocked[out.tmpl.precolor[v]] = true;
    for (int f : out.tmpl.forbidden[mover]) blocked[f] = true;
    int color = 0;
    for (int cand = 1; cand <= out.colors.size; ++cand)
      if (!blocked[cand]) {
        color = cand;
        break;
      }
    if (color == 0)
      throw std::logic_error("goodify: no color available; the counting bound was violated");

    // cost(T') = cost(T) + k - |F(mover)| = cost(T); respecting colorings of
    // the new template respect the old one, so unsatisfiability persists.
    out.tmpl.precolor[mover] = color;
    out.tmpl.forbidden[mover].clear();
    out.cost = k_cost(out.tmpl, k);
    if (out.cost != w.cost) throw std::logic_error("goodify: cost drifted");
  }
  return out;
}

namespace {

// Enumerates candidate templates in canonical order and feeds each to
// `sink`; returns false when sink stops the walk. `counter` tracks how many
// candidates were produced; the walk aborts past `cap` (cap < 0 = none).
template <typename Sink>
bool walk_candidates(const Graph& g, int k, const ColorSet& c, std::int64_t cap,
                     std::int64_t& counter, Sink&& sink) {
  const int n = g.vertex_count();
  const int max_s = std::min(n, 2 * k - 1);  // k|S| < 2k^2
  const int max_f = std::min(k, c.size);

  VertexSet s_verts;

  // Forbidden-set assignment over the uncolored vertices, maximal within
  // the remaining cost budget: either every set is full (size max_f) or
  // the budget is exhausted exactly.
  auto enumerate_forbidden = [&](const Template& base, int fbudget, auto&& relay) -> bool {
    std::vector<int> uncolored;
    for (int v = 0; v < n; ++v)
      if (base.precolor[v] == 0) uncolored.push_back(v);
    const int m = static_cast<int>(uncolored.size());

    std::vector<int> sizes(static_cast<std::size_t>(m), 0);
    const bool all_full = static_cast<std::int64_t>(m) * max_f <= fbudget;

    std::vector<std::vector<int>> chosen(static_cast<std::size_t>(m));
    auto assign_colors = [&](auto&& self, int idx, Template& t) -> bool {
      if (idx == m) {
        ++counter;
        if (cap >= 0 && counter > cap) throw BudgetExhausted(
            "enumerate_witness: candidate budget (" + std::to_string(cap) + ") exceeded");
        return relay(t);
      }
      const int v = uncolored[static_cast<std::size_t>(idx)];
      const int want = sizes[static_cast<std::size_t>(idx)];
      // All `want`-subsets of colors 1..|C| in lexicographic order.
      std::vector<int> combo(static_cast<std::size_t>(want));
      auto combos = [&](auto&& rec, int pos, int from) -> bool {
        if (pos == want) {
          t.forbidden[v].assign(combo.begin(), combo.end());
          const bool go_on = self(self, idx + 1, t);
          t.forbidden[v].clear();
          return go_on;
        }
        for (int col = from; col <= c.size; ++col) {
          combo[static_cast<std::size_t>(pos)] = col;
          if (!rec(rec, pos + 1, col + 1)) return false;
        }
        return true;
      };
      return combos(combos, 0, 1);
    };

    auto size_profiles = [&](auto&& self, int idx, int left) -> bool {
      if (idx == m) {
        if (left != 0) return true;  // not maximal: budget not exhausted
        Template t = base;
        return assign_colors(assign_colors, 0, t);
      }
      const int remaining_capacity = (m - idx - 1) * max_f;
      for (int size = std::min(max_f, left); size >= 0; --size) {
        if (left - size > remaining_capacity) break;  // later vertices cannot absorb the rest
        sizes[static_cast<std::size_t>(idx)] = size;
        if (!self(self, idx + 1, left - size)) return false;
      }
      return true;
    };

    if (all_full) {
      std::fill(sizes.begin(), sizes.end(), max_f);
      Template t = base;
      return assign_colors(assign_colors, 0, t);
    }
    return size_profiles(size_profiles, 0, fbudget);
  };

  // Proper colorings of G[S] in restricted-growth form (first vertex takes
  // color 1, each later vertex a used color or the least unused one), which
  // canonicalizes up to color permutation.
  auto enumerate_colorings = [&](auto&& self, std::size_t idx, Template& t, int max_used) -> bool {
    if (idx == s_verts.size()) {
      const int fbudget = 2 * k * k - 1 - k * static_cast<int>(s_verts.size());
      return enumerate_forbidden(t, fbudget, [&](Template& full) { return sink(full); });
    }
    const int v = s_verts[idx];
    const int limit = std::min(c.size, max_used + 1);
    for (int col = 1; col <= limit; ++col) {
      bool proper = true;
      for (std::size_t j = 0; j < idx && proper; ++j)
        if (g.adjacent(s_verts[j], v) && t.precolor[s_verts[j]] == col) proper = false;
      if (!proper) continue;
      t.precolor[v] = col;
      const bool go_on = self(self, idx + 1, t, std::max(max_used, col));
      t.precolor[v] = 0;
      if (!go_on) return false;
    }
    return true;
  };

  auto subsets = [&](auto&& self, int from, int want) -> bool {
    if (want == 0) {
      Template t = empty_template(n);
      return enumerate_colorings(enumerate_colorings, 0, t, 0);
    }
    for (int v = from; v <= n - want; ++v) {
      s_verts.push_back(v);
      const bool go_on = self(self, v + 1, want - 1);
      s_verts.pop_back();
      if (!go_on) return false;
    }
    return true;
  };

  for (int s_size = 0; s_size <= max_s; ++s_size)
    if (!subsets(subsets, 0, s_size)) return false;
  return true;
}

}  // namespace

std::int64_t count_witness_candidates(const Graph& g, int k, const ColorSet& c,
                                      std::int64_t cap) {
  std::int64_t counter = 0;
  try {
    walk_candidates(g, k, c, cap, counter, [](Template&) { return true; });
  } catch (const BudgetExhausted&) {
    return counter;
  }
  return counter;
}

std::optional<Witness> enumerate_witness(const Graph& g, int k, const ColorSet& c,
                                         const EnumerationBudget& budget) {
  if (k < 1) throw std::invalid_argument("enumerate_witness: need k >= 1");
  const std::int64_t candidates = count_witness_candidates(g, k, c, budget.max_templates);
  if (candidates > budget.max_templates)
    throw BudgetExhausted("enumerate_witness: " + std::to_string(candidates) +
                          "+ candidate templates exceed budget " +
                          std::to_string(budget.max_templates));

  std::optional<Witness> found;
  std::int64_t counter = 0;
  walk_candidates(g, k, c, -1, counter, [&](Template& t) {
    if (!find_respecting_coloring(g, t, c, budget.solver)) {
      found = make_witness(g, t, k, c);
      return false;  // first hit in canonical order
    }
    return true;
  });
  return found;
}

MinimalInextensible minimal_inextensible_subgraph(const Graph& g, int k, const ColorSet& c,
                                                  ShrinkMode mode, std::optional<Witness> start,
                                                  const EnumerationBudget& budget) {
  if (k < 1) throw std::invalid_argument("minimal_inextensible_subgraph: need k >= 1");

  Graph current = g;
  VertexSet vertices(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) vertices[static_cast<std::size_t>(v)] = v;

  Witness witness = [&]() {
    if (start) return *start;
    if (chromatic_number(g, budget.solver) > c.size)
      return make_witness(g, empty_template(g.vertex_count()), k, c);
    auto found = enumerate_witness(g, k, c, budget);
    if (!found)
      throw std::invalid_argument("minimal_inextensible_subgraph: graph is extensible");
    return *found;
  }();

  const bool can_goodify = c.size >= 3 * k - 1;
  if (mode == ShrinkMode::heuristic && can_goodify) witness = goodify(current, witness);

  bool shrunk = true;
  bool out_of_budget = false;
  while (shrunk && !out_of_budget) {
    shrunk = false;
    const int n = current.vertex_count();
    for (int v = 0; v < n && !shrunk && !out_of_budget; ++v) {
      VertexSet rest;
      for (int u = 0; u < n; ++u)
        if (u != v) rest.push_back(u);
      const InducedSubgraph sub = induced_subgraph(current, rest);

      std::optional<Witness> next;
      if (mode == ShrinkMode::exact) {
        try {
          next = enumerate_witness(sub.graph, k, c, budget);
        } catch (const BudgetExhausted&) {
          out_of_budget = true;  // report the partial shrink instead
          break;
        }
      } else {
        if (witness.tmpl.precolor[v] == 0) {
          // Restriction drops v and its forbidden set; cost only shrinks.
          Template t = restrict_template(current, witness.tmpl, rest);
          if (!find_respecting_coloring(sub.graph, t, c, budget.solver))
            next = make_witness(sub.graph, std::move(t), k, c);
        } else {
          // Deleting precolored u: its color joins the forbidden sets of
          // its uncolored neighbors. Valid when the cost stays below 2k^2.
          const int dropped_color = witness.tmpl.precolor[v];
          Template t = restrict_template(current, witness.tmpl, rest);
          bool valid = true;
          for (int local = 0; local < sub.graph.vertex_count(); ++local) {
            const int orig = sub.vertices[static_cast<std::size_t>(local)];
            if (t.precolor[local] != 0 || !current.adjacent(orig, v)) continue;
            auto& fs = t.forbidden[local];
            if (!std::binary_search(fs.begin(), fs.end(), dropped_color)) {
              fs.insert(std::upper_bound(fs.begin(), fs.end(), dropped_color), dropped_color);
              if (static_cast<int>(fs.size()) > k) valid = false;
            }
          }
          if (valid && k_cost(t, k) < 2 * k * k &&
              !find_respecting_coloring(sub.graph, t, c, budget.solver))
            next = make_witness(sub.graph, std::move(t), k, c);
        }
      }

      if (next) {
        witness = (mode == ShrinkMode::heuristic && can_goodify) ? goodify(sub.graph, *next)
                                                                 : *next;
        current = sub.graph;
        vertices.erase(vertices.begin() + v);
        shrunk = true;
      }
    }
  }

  MinimalInextensible out;
  out.subgraph = current;
  out.vertices = vertices;
  out.witness = witness;
  out.minimal_certified = (mode == ShrinkMode::exact) && !out_of_budget;
  out.budget_exhausted = out_of_budget;
  out.order_bound_ok = current.vertex_count() > c.size - k + 1;
  out.connectivity_ok = vertex_connectivity_at_least(current, k + 1);
  if (out.minimal_certified && can_goodify) {
    // For a certified minimal graph with |C| >= 3k-1, the order and
    // connectivity guarantees are theorems; failing them means a bug.
    if (!out.order_bound_ok)
      throw std::logic_error("minimal_inextensible_subgraph: order bound violated");
    if (!out.connectivity_ok)
      throw std::logic_error("minimal_inextensible_subgraph: connectivity bound violated");
  }
  return out;
}

}  // namespace chromcon
