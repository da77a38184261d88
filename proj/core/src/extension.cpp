#include "chromcon/extension.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "chromcon/assignment.hpp"
#include "chromcon/sequences.hpp"
#include "chromcon/solver.hpp"

namespace chromcon {

int strong_palette_floor(int k) { return (49 * k + 15) / 16 - 1; }

namespace {

void check_good_template(const Graph& g, const Template& t, int k, const ColorSet& c,
                         const char* who) {
  validate_template(g, t, c);
  if (k_cost(t, k) >= 2 * k * k)
    throw std::invalid_argument(std::string(who) + ": template cost must stay below 2k^2");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (static_cast<int>(t.forbidden[v].size()) >= k)
      throw std::invalid_argument(std::string(who) + ": template not good at vertex " +
                                  std::to_string(v));
}

std::set<int> colors_outside_class(const std::vector<int>& assigned,
                                   const std::vector<int>& class_of, int cls) {
  std::set<int> out;
  for (std::size_t v = 0; v < assigned.size(); ++v)
    if (assigned[v] != 0 && class_of[v] != cls) out.insert(assigned[v]);
  return out;
}

std::vector<int> pool_minus(const ColorSet& c, const std::set<int>& blocked) {
  std::vector<int> pool;
  for (int col = 1; col <= c.size; ++col)
    if (!blocked.count(col)) pool.push_back(col);
  return pool;
}

void block_forbidden(const Template& t, const std::vector<int>& vertices, std::set<int>& blocked) {
  for (int v : vertices)
    for (int f : t.forbidden[v]) blocked.insert(f);
}

/// Strips padding, re-verifies, and fills the result coloring.
Coloring finish_coloring(const Graph& original, const Template& original_tmpl,
                         const ColorSet& c, const std::vector<int>& assigned, int original_n,
                         TraceLog& trace, const char* label) {
  Coloring f;
  f.colors.assign(assigned.begin(), assigned.begin() + original_n);
  bool total = true;
  for (int col : f.colors)
    if (col == 0) total = false;
  trace.require(std::string(label) + ":total", total);
  trace.require(std::string(label) + ":proper", is_proper(original, f, c));
  trace.require(std::string(label) + ":respects", respects(original, original_tmpl, f));
  return f;
}

}  // namespace

ExtensionResult extend_4k(const Graph& g, const Template& t,
                          const std::vector<std::vector<int>>& partition, int k,
                          const ColorSet& c) {
  if (k < 1) throw std::invalid_argument("extend_4k: need k >= 1");
  if (c.size < 4 * k - 2) throw std::invalid_argument("extend_4k: needs |C| >= 4k-2");
  check_good_template(g, t, k, c, "extend_4k");
  validate_partition(g, partition);
  const int chi = static_cast<int>(partition.size());
  if (chi > c.size - 2 * k + 1)
    throw std::invalid_argument("extend_4k: needs at most |C|-2k+1 classes");

  ExtensionResult result;
  TraceLog& trace = result.trace;
  trace.begin_stage("split:setup");

  PaddedInstance inst = pad_empty_classes(g, t, partition);
  const int pn = inst.graph.vertex_count();

  struct SplitClass {
    std::vector<int> members;
    int weight = 0;
    int p = 0;
  };
  std::vector<SplitClass> classes(static_cast<std::size_t>(chi));
  int s_size = 0;
  for (int v = 0; v < pn; ++v)
    if (inst.tmpl.precolor[v] != 0) ++s_size;
  long long total_weight = 0;
  for (int i = 0; i < chi; ++i) {
    SplitClass& cls = classes[static_cast<std::size_t>(i)];
    for (int v : inst.classes[static_cast<std::size_t>(i)])
      if (inst.tmpl.precolor[v] == 0) cls.members.push_back(v);
    std::sort(cls.members.begin(), cls.members.end());
    for (int v : cls.members) cls.weight += static_cast<int>(inst.tmpl.forbidden[v].size());
    cls.p = cls.weight / k;
    total_weight += cls.weight;
  }
  const int t_total = 2 * k - s_size;
  int p_total = 0;
  for (const SplitClass& cls : classes) p_total += cls.p;
  trace.note("t", t_total);
  trace.note("p", p_total);
  trace.require("split:weight-capacity", static_cast<long long>(k) * t_total > total_weight);
  trace.require("split:budget", p_total <= t_total - 1);
  const int t_prime = t_total - p_total;

  std::vector<int> assigned(static_cast<std::size_t>(pn), 0);
  std::set<int> used_everywhere;
  for (int v = 0; v < pn; ++v)
    if (inst.tmpl.precolor[v] != 0) {
      assigned[static_cast<std::size_t>(v)] = inst.tmpl.precolor[v];
      used_everywhere.insert(inst.tmpl.precolor[v]);
    }

  // Heavy classes first: split each into p_i parts of weight under 2k and
  // hand the parts p pairwise different fresh colors.
  trace.begin_stage("split:parts");
  std::vector<std::vector<int>> part_vertices;
  std::vector<std::vector<int>> part_pools;
  const std::set<int> s_colors = used_everywhere;
  for (int i = 0; i < chi; ++i) {
    const SplitClass& cls = classes[static_cast<std::size_t>(i)];
    if (cls.p < 1) continue;
    std::vector<int> weights;
    weights.reserve(cls.members.size());
    for (int v : cls.members) weights.push_back(static_cast<int>(inst.tmpl.forbidden[v].size()));
    const auto parts = partition_bounded_indices(weights, k, cls.p);
    for (const auto& part : parts) {
      std::vector<int> verts;
      for (std::size_t idx : part) verts.push_back(cls.members[idx]);
      std::set<int> blocked = s_colors;
      block_forbidden(inst.tmpl, verts, blocked);
      std::vector<int> pool = pool_minus(c, blocked);
      trace.require("split:part-pool-floor", static_cast<int>(pool.size()) >= p_total,
                    "pool=" + std::to_string(pool.size()) + " p=" + std::to_string(p_total));
      part_vertices.push_back(std::move(verts));
      part_pools.push_back(std::move(pool));
    }
  }
  if (!part_pools.empty()) {
    const DistinctAssignment da = assign_distinct_colors(part_pools);
    result.used_fallback |= da.used_fallback;
    trace.record("split:greedy-sufficient", !da.used_fallback);
    for (std::size_t j = 0; j < part_vertices.size(); ++j) {
      for (int v : part_vertices[j]) assigned[static_cast<std::size_t>(v)] = da.colors[j];
      used_everywhere.insert(da.colors[j]);
    }
  }
  trace.require("split:palette",
                static_cast<int>(used_everywhere.size()) <= 2 * k - t_prime,
                "used=" + std::to_string(used_everywhere.size()));

  // Light classes: each takes one color clear of everything used so far
  // and of its own forbidden sets; heavy-excess ones go first.
  trace.begin_stage("split:light");
  std::vector<int> heavy, light;
  for (int i = 0; i < chi; ++i) {
    if (classes[static_cast<std::size_t>(i)].p >= 1) continue;
    if (classes[static_cast<std::size_t>(i)].weight >= t_prime)
      heavy.push_back(i);
    else
      light.push_back(i);
  }
  auto by_weight_desc = [&](int a, int b) {
    const int wa = classes[static_cast<std::size_t>(a)].weight;
    const int wb = classes[static_cast<std::size_t>(b)].weight;
    if (wa != wb) return wa > wb;
    return a < b;
  };
  std::sort(heavy.begin(), heavy.end(), by_weight_desc);
  std::sort(light.begin(), light.end(), by_weight_desc);
  const int light_count = static_cast<int>(heavy.size() + light.size());

  std::vector<int> order = heavy;
  order.insert(order.end(), light.begin(), light.end());
  std::vector<std::vector<int>> class_pools;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const int i = order[pos];
    const SplitClass& cls = classes[static_cast<std::size_t>(i)];
    std::set<int> blocked = used_everywhere;
    block_forbidden(inst.tmpl, cls.members, blocked);
    class_pools.push_back(pool_minus(c, blocked));
    if (pos < heavy.size()) {
      trace.require("split:heavy-window",
                    cls.weight + static_cast<int>(pos) + 1 <= k + t_prime - 1,
                    "class " + std::to_string(i));
    } else {
      trace.require("split:light-floor",
                    static_cast<int>(class_pools.back().size()) >= light_count,
                    "class " + std::to_string(i));
    }
  }
  if (!order.empty()) {
    const DistinctAssignment da = assign_distinct_colors(class_pools);
    result.used_fallback |= da.used_fallback;
    trace.record("split:greedy-sufficient", !da.used_fallback);
    for (std::size_t pos = 0; pos < order.size(); ++pos)
      for (int v : classes[static_cast<std::size_t>(order[pos])].members)
        assigned[static_cast<std::size_t>(v)] = da.colors[pos];
  }

  trace.begin_stage("split:assemble");
  result.coloring = finish_coloring(g, t, c, assigned, inst.original_n, trace, "split");
  return result;
}

ExtensionResult extend_316k(const Graph& g, const Template& t,
                            const std::vector<std::vector<int>>& partition, int k,
                            const ColorSet& c) {
  if (k < 1) throw std::invalid_argument("extend_316k: need k >= 1");
  if (c.size < strong_palette_floor(k))
    throw std::invalid_argument("extend_316k: needs |C| >= ceil((3+1/16)k)-1 = " +
                                std::to_string(strong_palette_floor(k)));
  check_good_template(g, t, k, c, "extend_316k");
  validate_partition(g, partition);
  const int chi = static_cast<int>(partition.size());
  if (chi > c.size - 2 * k + 2)
    throw std::invalid_argument("extend_316k: needs at most |C|-2k+2 classes");

  ReductionState st = reduce_classes(g, t, partition, k, c);
  ExtensionResult result;
  TraceLog& trace = st.trace;
  const int t_prime = st.t_prime;

  std::vector<int> assigned = st.c1;

  std::vector<char> in_I0(static_cast<std::size_t>(chi), 0);
  std::vector<char> in_I2(static_cast<std::size_t>(chi), 0);
  for (int i = 0; i < chi; ++i)
    if (st.classes[static_cast<std::size_t>(i)].t == 0) in_I0[static_cast<std::size_t>(i)] = 1;

  auto sum_t_over = [&](auto&& pred) {
    int acc = 0;
    for (int i = 0; i < chi; ++i)
      if (pred(i)) acc += st.classes[static_cast<std::size_t>(i)].t;
    return acc;
  };

  // Iterated augmentation: while some class with leftover parts undercuts
  // the pigeonhole threshold, color its t_i+1 parts with t_i colors and
  // move it out of the greedy phase; the threshold is re-evaluated because
  // it depends on the remaining classes.
  trace.begin_stage("extend:augment");
  for (;;) {
    const int s1 = sum_t_over([&](int i) {
      return !in_I0[static_cast<std::size_t>(i)] && !in_I2[static_cast<std::size_t>(i)];
    });
    int pick = -1;
    for (int i = 0; i < chi && pick < 0; ++i) {
      if (in_I0[static_cast<std::size_t>(i)] || in_I2[static_cast<std::size_t>(i)]) continue;
      const ClassReduction& cls = st.classes[static_cast<std::size_t>(i)];
      const long long threshold =
          static_cast<long long>(cls.t) *
          (c.size - 3 * k + t_prime + s1 + st.precolored_in_class(i) + cls.q);
      if (cls.x < threshold) pick = i;
    }
    if (pick < 0) break;

    const ClassReduction& cls = st.classes[static_cast<std::size_t>(pick)];
    const std::set<int> outside = colors_outside_class(assigned, st.class_of, pick);
    trace.require("extend:aug-palette",
                  static_cast<int>(outside.size()) <=
                      2 * k - t_prime - s1 - st.precolored_in_class(pick) - cls.q,
                  "class " + std::to_string(pick));
    const std::vector<int> base = pool_minus(c, outside);
    std::vector<std::vector<int>> pools;
    long long pool_total = 0;
    for (const auto& part : cls.parts) {
      std::set<int> blocked(outside.begin(), outside.end());
      block_forbidden(st.tmpl, part, blocked);
      pools.push_back(pool_minus(c, blocked));
      trace.require("extend:aug-pool-nonempty", !pools.back().empty());
      pool_total += static_cast<long long>(pools.back().size());
    }
    trace.require("extend:aug-pigeonhole", pool_total > static_cast<long long>(base.size()));
    const std::vector<int> colors = assign_with_shared_pair(pools);
    const std::set<int> distinct(colors.begin(), colors.end());
    trace.require("extend:aug-color-count", static_cast<int>(distinct.size()) <= cls.t,
                  "class " + std::to_string(pick));
    for (std::size_t j = 0; j < cls.parts.size(); ++j)
      for (int v : cls.parts[j]) assigned[static_cast<std::size_t>(v)] = colors[j];
    in_I2[static_cast<std::size_t>(pick)] = 1;
  }

  const int s1 = sum_t_over([&](int i) {
    return !in_I0[static_cast<std::size_t>(i)] && !in_I2[static_cast<std::size_t>(i)];
  });
  const int s2 = sum_t_over([&](int i) { return static_cast<bool>(in_I2[static_cast<std::size_t>(i)]); });
  trace.note("s1", s1);
  trace.note("s2", s2);

  std::vector<int> I_list, I1_list;
  for (int i = 0; i < chi; ++i) {
    if (in_I2[static_cast<std::size_t>(i)]) continue;
    I_list.push_back(i);
    if (!in_I0[static_cast<std::size_t>(i)]) I1_list.push_back(i);
  }

  // The augmentation stopped, so every remaining class meets the threshold,
  // and the palette used outside any remaining class is bounded.
  for (int i : I_list) {
    const ClassReduction& cls = st.classes[static_cast<std::size_t>(i)];
    const long long threshold =
        static_cast<long long>(cls.t) *
        (c.size - 3 * k + t_prime + s1 + st.precolored_in_class(i) + cls.q);
    trace.require("extend:threshold", cls.x >= threshold, "class " + std::to_string(i));
    trace.require("extend:palette-mid",
                  static_cast<int>(colors_outside_class(assigned, st.class_of, i).size()) <=
                      2 * k - t_prime - s1 - st.precolored_in_class(i) - cls.q,
                  "class " + std::to_string(i));
  }

  // Bring the lightest part of every remaining class to the front.
  for (int i : I_list) {
    ClassReduction& cls = st.classes[static_cast<std::size_t>(i)];
    std::size_t lightest = 0;
    auto part_weight = [&](const std::vector<int>& part) {
      int w = 0;
      for (int v : part) w += st.weight_of(v);
      return w;
    };
    for (std::size_t j = 1; j < cls.parts.size(); ++j)
      if (part_weight(cls.parts[j]) < part_weight(cls.parts[lightest])) lightest = j;
    std::swap(cls.parts[0], cls.parts[lightest]);
    cls.y = part_weight(cls.parts[0]);
    if (in_I0[static_cast<std::size_t>(i)])
      trace.require("extend:light-excess", cls.y == cls.x, "class " + std::to_string(i));
  }

  // Color everything but the lightest part of the remaining weighty classes
  // with s1 pairwise different colors.
  trace.begin_stage("extend:tail");
  {
    std::vector<std::vector<int>> pools;
    std::vector<std::pair<int, std::size_t>> owners;
    for (int i : I1_list) {
      const ClassReduction& cls = st.classes[static_cast<std::size_t>(i)];
      const std::set<int> outside = colors_outside_class(assigned, st.class_of, i);
      for (std::size_t j = 1; j < cls.parts.size(); ++j) {
        std::set<int> blocked(outside.begin(), outside.end());
        block_forbidden(st.tmpl, cls.parts[j], blocked);
        pools.push_back(pool_minus(c, blocked));
        trace.require("extend:tail-pool-floor", static_cast<int>(pools.back().size()) >= s1,
                      "class " + std::to_string(i) + " part " + std::to_string(j));
        owners.emplace_back(i, j);
      }
    }
    if (!pools.empty()) {
      const DistinctAssignment da = assign_distinct_colors(pools);
      result.used_fallback |= da.used_fallback;
      trace.record("extend:greedy-sufficient", !da.used_fallback);
      for (std::size_t idx = 0; idx < owners.size(); ++idx) {
        const auto& [i, j] = owners[idx];
        for (int v : st.classes[static_cast<std::size_t>(i)].parts[j])
          assigned[static_cast<std::size_t>(v)] = da.colors[idx];
      }
    }
  }

  for (int i : I_list) {
    trace.require("extend:palette-late",
                  static_cast<int>(colors_outside_class(assigned, st.class_of, i).size()) <=
                      2 * k - t_prime - st.precolored_in_class(i) -
                          st.classes[static_cast<std::size_t>(i)].p,
                  "class " + std::to_string(i));
  }

  // Pools for the lightest parts, frozen against the current coloring.
  std::vector<std::vector<int>> light_pool(static_cast<std::size_t>(chi));
  for (int i : I_list) {
    const ClassReduction& cls = st.classes[static_cast<std::size_t>(i)];
    std::set<int> blocked = colors_outside_class(assigned, st.class_of, i);
    block_forbidden(st.tmpl, cls.parts[0], blocked);
    light_pool[static_cast<std::size_t>(i)] = pool_minus(c, blocked);
  }

  trace.begin_stage("extend:closing");
  std::vector<int> J = I_list;
  if (static_cast<int>(I_list.size()) > c.size - 2 * k + 1) {
    trace.require("extend:closing-degenerate",
                  static_cast<int>(I_list.size()) == chi && chi == c.size - 2 * k + 2 &&
                      s2 == 0,
                  "|I|=" + std::to_string(I_list.size()));
    int drop = -1;
    for (int i : I_list) {
      if (!in_I0[static_cast<std::size_t>(i)]) continue;
      if (static_cast<int>(light_pool[static_cast<std::size_t>(i)].size()) >=
          static_cast<int>(I_list.size())) {
        drop = i;
        break;
      }
    }
    trace.require("extend:closing-drop-exists", drop >= 0);
    J.erase(std::find(J.begin(), J.end(), drop));
  }

  std::vector<int> heavy;  // classes of J whose excess reaches t'
  for (int i : J)
    if (st.classes[static_cast<std::size_t>(i)].x >= t_prime) heavy.push_back(i);
  for (int i : I1_list)
    trace.require("extend:heavy-includes-tails",
                  std::find(heavy.begin(), heavy.end(), i) != heavy.end(),
                  "class " + std::to_string(i));

  const int d = c.size - 3 * k + 1;
  const int d_prime = d + s1 - 1;
  const int s = s1 - 1;
  trace.note("d", d);
  trace.note("d_prime", d_prime);
  trace.require("extend:margin", 16 * d >= k);

  auto by_excess_desc = [&](int a, int b) {
    const int xa = st.classes[static_cast<std::size_t>(a)].x;
    const int xb = st.classes[static_cast<std::size_t>(b)].x;
    if (xa != xb) return xa > xb;
    return a < b;
  };
  std::sort(heavy.begin(), heavy.end(), by_excess_desc);

  std::vector<int> used_on_light;
  auto assign_round = [&](const std::vector<int>& members) {
    if (members.empty()) return;
    std::vector<std::vector<int>> pools;
    for (int i : members) pools.push_back(light_pool[static_cast<std::size_t>(i)]);
    const DistinctAssignment da = assign_distinct_colors(pools, used_on_light);
    result.used_fallback |= da.used_fallback;
    trace.record("extend:greedy-sufficient", !da.used_fallback);
    for (std::size_t idx = 0; idx < members.size(); ++idx) {
      const int i = members[idx];
      for (int v : st.classes[static_cast<std::size_t>(i)].parts[0])
        assigned[static_cast<std::size_t>(v)] = da.colors[idx];
      used_on_light.push_back(da.colors[idx]);
    }
  };

  if (t_prime <= d_prime) {
    result.final_branch = 1;
    for (std::size_t pos = 0; pos < heavy.size(); ++pos) {
      const ClassReduction& cls = st.classes[static_cast<std::size_t>(heavy[pos])];
      trace.require("extend:branch1-window",
                    cls.y + static_cast<int>(pos) + 1 <= k + t_prime - 1,
                    "class " + std::to_string(heavy[pos]));
    }
    assign_round(heavy);
  } else if (static_cast<long long>(s) * k <=
             static_cast<long long>(d) * k + static_cast<long long>(s) * (t_prime + d_prime)) {
    result.final_branch = 2;
    std::vector<int> first = I1_list, second;
    std::sort(first.begin(), first.end(), by_excess_desc);
    for (int i : heavy)
      if (std::find(first.begin(), first.end(), i) == first.end()) second.push_back(i);
    for (int i : first)
      trace.require("extend:branch2-floor",
                    static_cast<int>(light_pool[static_cast<std::size_t>(i)].size()) >=
                            d + t_prime &&
                        d + t_prime >= static_cast<int>(first.size()),
                    "class " + std::to_string(i));
    for (std::size_t pos = 0; pos < second.size(); ++pos) {
      const ClassReduction& cls = st.classes[static_cast<std::size_t>(second[pos])];
      trace.require("extend:branch2-window",
                    cls.y + static_cast<int>(pos) + 1 <= k + t_prime - s1 + d - 1,
                    "class " + std::to_string(second[pos]));
    }
    assign_round(first);
    assign_round(second);
  } else {
    result.final_branch = 3;
    // The closing bound, kept in exact integers: the 1/16 margin is tight.
    trace.require("extend:final-branch-bound",
                  static_cast<long long>(k - (t_prime + d_prime)) * (t_prime - d_prime) <=
                      2LL * d * (t_prime + d_prime),
                  "t'=" + std::to_string(t_prime) + " d'=" + std::to_string(d_prime));
    for (std::size_t pos = 0; pos < heavy.size(); ++pos) {
      const ClassReduction& cls = st.classes[static_cast<std::size_t>(heavy[pos])];
      trace.require("extend:branch3-window",
                    cls.y + static_cast<int>(pos) + 1 <= k + t_prime + d - 1,
                    "class " + std::to_string(heavy[pos]));
    }
    assign_round(heavy);
  }

  // Light leftovers of J, then the dropped class if any.
  std::vector<int> rest;
  for (int i : J)
    if (std::find(heavy.begin(), heavy.end(), i) == heavy.end()) rest.push_back(i);
  std::sort(rest.begin(), rest.end(), by_excess_desc);
  for (int i : rest) {
    const ClassReduction& cls = st.classes[static_cast<std::size_t>(i)];
    trace.require("extend:light-subset", in_I0[static_cast<std::size_t>(i)] != 0,
                  "class " + std::to_string(i));
    trace.require("extend:closing-floor-J",
                  cls.x <= t_prime - 1 &&
                      static_cast<int>(light_pool[static_cast<std::size_t>(i)].size()) >=
                          static_cast<int>(J.size()),
                  "class " + std::to_string(i));
  }
  assign_round(rest);

  std::vector<int> dropped;
  for (int i : I_list)
    if (std::find(J.begin(), J.end(), i) == J.end()) dropped.push_back(i);
  for (int i : dropped)
    trace.require("extend:closing-floor-I",
                  static_cast<int>(light_pool[static_cast<std::size_t>(i)].size()) >=
                      static_cast<int>(I_list.size()),
                  "class " + std::to_string(i));
  assign_round(dropped);

  trace.require("extend:closing-color-count",
                static_cast<int>(std::set<int>(used_on_light.begin(), used_on_light.end())
                                     .size()) <= static_cast<int>(I_list.size()));

  trace.begin_stage("extend:assemble");
  result.coloring = finish_coloring(g, t, c, assigned, st.original_n, trace, "extend");
  result.trace = trace;
  return result;
}

}  // namespace chromcon
