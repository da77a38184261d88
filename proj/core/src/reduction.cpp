#include "chromcon/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "chromcon/assignment.hpp"
#include "chromcon/sequences.hpp"

namespace chromcon {

namespace {

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

std::vector<int> sorted_pool(const std::set<int>& used, const ColorSet& c) {
  std::vector<int> pool;
  for (int col = 1; col <= c.size; ++col)
    if (!used.count(col)) pool.push_back(col);
  return pool;
}

}  // namespace

void validate_partition(const Graph& g, const std::vector<std::vector<int>>& partition) {
  std::vector<int> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& cls : partition) {
    if (!is_stable_set(g, cls))
      throw std::invalid_argument("partition: class {" + join(cls) + "} is not stable");
    for (int v : cls) {
      if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("partition: vertex " + std::to_string(v) + " out of range");
      if (seen[v]++)
        throw std::invalid_argument("partition: vertex " + std::to_string(v) + " repeated");
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!seen[v])
      throw std::invalid_argument("partition: vertex " + std::to_string(v) + " uncovered");
}

PaddedInstance pad_empty_classes(const Graph& g, const Template& t,
                                 const std::vector<std::vector<int>>& partition) {
  int pads = 0;
  for (const auto& cls : partition) {
    bool has_uncolored = false;
    for (int v : cls)
      if (t.precolor[v] == 0) has_uncolored = true;
    if (!has_uncolored) ++pads;
  }

  PaddedInstance out;
  out.original_n = g.vertex_count();
  out.graph = Graph(g.vertex_count() + pads);
  for (const auto& [u, v] : g.edges()) out.graph.add_edge(u, v);
  out.tmpl = t;
  out.tmpl.precolor.resize(static_cast<std::size_t>(out.graph.vertex_count()), 0);
  out.tmpl.forbidden.resize(static_cast<std::size_t>(out.graph.vertex_count()));
  out.classes = partition;
  int next = g.vertex_count();
  for (auto& cls : out.classes) {
    bool has_uncolored = false;
    for (int v : cls)
      if (t.precolor[v] == 0) has_uncolored = true;
    if (!has_uncolored) cls.push_back(next++);
  }
  return out;
}

int ReductionState::precolored_in_class(int i) const {
  int count = 0;
  for (int v : stable_classes[static_cast<std::size_t>(i)])
    if (tmpl.precolor[v] != 0) ++count;
  return count;
}

ReductionState reduce_classes(const Graph& g, const Template& t,
                              const std::vector<std::vector<int>>& partition, int k,
                              const ColorSet& c) {
  if (k < 1) throw std::invalid_argument("reduce_classes: need k >= 1");
  if (c.size < 3 * k - 1) throw std::invalid_argument("reduce_classes: needs |C| >= 3k-1");
  validate_template(g, t, c);
  validate_partition(g, partition);
  const int cost = k_cost(t, k);
  if (cost >= 2 * k * k) throw std::invalid_argument("reduce_classes: template cost >= 2k^2");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (static_cast<int>(t.forbidden[v].size()) >= k)
      throw std::invalid_argument("reduce_classes: template not good at vertex " +
                                  std::to_string(v));

  PaddedInstance padded = pad_empty_classes(g, t, partition);
  ReductionState st;
  st.graph = std::move(padded.graph);
  st.tmpl = std::move(padded.tmpl);
  st.colors = c;
  st.k = k;
  st.original_n = padded.original_n;
  st.stable_classes = std::move(padded.classes);
  st.class_of.assign(static_cast<std::size_t>(st.graph.vertex_count()), -1);
  for (std::size_t i = 0; i < st.stable_classes.size(); ++i)
    for (int v : st.stable_classes[i]) st.class_of[static_cast<std::size_t>(v)] = static_cast<int>(i);

  const int chi = static_cast<int>(st.stable_classes.size());
  int s_size = 0;
  for (int v = 0; v < st.graph.vertex_count(); ++v)
    if (st.tmpl.precolor[v] != 0) ++s_size;

  st.trace.begin_stage("reduce:setup");
  st.t = 2 * k - s_size;
  st.trace.note("t", st.t);
  st.trace.note("cost", cost);

  long long total_weight = 0;
  st.classes.resize(static_cast<std::size_t>(chi));
  for (int i = 0; i < chi; ++i) {
    ClassReduction& cls = st.classes[static_cast<std::size_t>(i)];
    for (int v : st.stable_classes[static_cast<std::size_t>(i)])
      if (st.tmpl.precolor[v] == 0) cls.members.push_back(v);
    std::sort(cls.members.begin(), cls.members.end());
    for (int v : cls.members) cls.weight += st.weight_of(v);
    cls.p = cls.weight / k;
    st.p += cls.p;
    total_weight += cls.weight;
  }
  // Capacity: k*t = 2k^2 - k|S| exceeds the total class weight because the
  // template cost stays below 2k^2.
  st.trace.require("reduce:weight-capacity",
                   static_cast<long long>(k) * st.t > total_weight,
                   "k*t=" + std::to_string(static_cast<long long>(k) * st.t) +
                       " total=" + std::to_string(total_weight));
  st.trace.require("reduce:budget", st.p <= st.t - 1,
                   "p=" + std::to_string(st.p) + " t=" + std::to_string(st.t));

  st.c1.assign(static_cast<std::size_t>(st.graph.vertex_count()), 0);
  std::set<int> used_colors;
  for (int v = 0; v < st.graph.vertex_count(); ++v)
    if (st.tmpl.precolor[v] != 0) {
      st.c1[static_cast<std::size_t>(v)] = st.tmpl.precolor[v];
      used_colors.insert(st.tmpl.precolor[v]);
    }

  for (int i = 0; i < chi; ++i) {
    ClassReduction& cls = st.classes[static_cast<std::size_t>(i)];
    st.trace.begin_stage("reduce:class-" + std::to_string(i));

    WeightedClass wc;
    wc.vertices = cls.members;
    for (int v : cls.members) wc.weights.push_back(st.weight_of(v));
    FitSequence seq = critical_sequence(wc, k);
    const JumpProfile prof = jump_profile(seq, k);
    const int n_terms = static_cast<int>(seq.terms.size());
    const int ell = static_cast<int>(prof.landmarks.size());

    // The shared pool: colors free of everything colored so far. The
    // counting |c1(S u P')| <= |S| + p <= 2k - 1 keeps at least k colors.
    std::vector<int> pool = sorted_pool(used_colors, c);
    st.trace.require("reduce:pool-floor", static_cast<int>(pool.size()) >= k,
                     "pool=" + std::to_string(pool.size()));

    std::vector<int> term_color(static_cast<std::size_t>(n_terms), 0);
    int window_swaps = 0;
    auto term_pool = [&](const FitTerm& term) {
      std::set<int> blocked;
      for (int v : term.vertices)
        for (int f : st.tmpl.forbidden[v]) blocked.insert(f);
      std::vector<int> out;
      for (int col : pool)
        if (!blocked.count(col)) out.push_back(col);
      return out;
    };

    for (int r = 0; r + 1 < ell; ++r) {
      // Window of positions n_r..n_{r+1} (1-based), all currently uncolored.
      const int lo = prof.landmark_positions[static_cast<std::size_t>(r)] - 1;
      const int hi = prof.landmark_positions[static_cast<std::size_t>(r) + 1] - 1;
      const int allowance = hi - lo;  // q_{r+1} - q_r + 1

      long long window_weight = 0;
      std::vector<std::vector<int>> pools;
      for (int j = lo; j <= hi; ++j) {
        window_weight += seq.terms[static_cast<std::size_t>(j)].weight;
        pools.push_back(term_pool(seq.terms[static_cast<std::size_t>(j)]));
        st.trace.require("reduce:window-pool-nonempty", !pools.back().empty());
      }
      st.trace.require("reduce:window-weight",
                       window_weight < static_cast<long long>(allowance) * k);
      long long pool_total = 0;
      for (const auto& p : pools) pool_total += static_cast<long long>(p.size());
      st.trace.require("reduce:window-pigeonhole",
                       pool_total > static_cast<long long>(pool.size()),
                       "pools=" + std::to_string(pool_total) +
                           " |L|=" + std::to_string(pool.size()));

      const std::vector<int> colors = assign_with_shared_pair(pools);
      for (int j = lo; j <= hi; ++j)
        term_color[static_cast<std::size_t>(j)] = colors[static_cast<std::size_t>(j - lo)];

      std::set<int> distinct(colors.begin(), colors.end());
      st.trace.require("reduce:window-color-count",
                       static_cast<int>(distinct.size()) <= allowance);
      const int last_color = colors.back();
      const int shared_count =
          static_cast<int>(std::count(colors.begin(), colors.end() - 1, last_color));
      if (static_cast<int>(distinct.size()) <= allowance - 1 || shared_count == 0) {
        // The last window term simply loses its color again.
        term_color[static_cast<std::size_t>(hi)] = 0;
      } else {
        // The last term duplicates exactly one earlier term's color: keep
        // it, uncolor another window term and move that term to the back.
        int duplicate = -1;
        for (int j = lo; j < hi; ++j)
          if (term_color[static_cast<std::size_t>(j)] == last_color) {
            duplicate = j;
            break;
          }
        int sacrifice = -1;
        for (int j = lo; j < hi; ++j)
          if (j != duplicate) {
            sacrifice = j;
            break;
          }
        st.trace.require("reduce:window-swap-exists", sacrifice >= 0);
        term_color[static_cast<std::size_t>(sacrifice)] = 0;
        std::swap(seq.terms[static_cast<std::size_t>(sacrifice)],
                  seq.terms[static_cast<std::size_t>(hi)]);
        std::swap(term_color[static_cast<std::size_t>(sacrifice)],
                  term_color[static_cast<std::size_t>(hi)]);
        ++window_swaps;
      }

      // Colors spent on the first n_{r+1}-1 terms stay within q_{r+1}.
      std::set<int> so_far;
      for (int j = 0; j < hi; ++j)
        if (term_color[static_cast<std::size_t>(j)] != 0)
          so_far.insert(term_color[static_cast<std::size_t>(j)]);
      st.trace.require("reduce:prefix-color-count",
                       static_cast<int>(so_far.size()) <=
                           prof.landmarks[static_cast<std::size_t>(r) + 1],
                       "used=" + std::to_string(so_far.size()));
    }

    if (window_swaps > 0) st.trace.note("window_swaps", window_swaps);

    // Split: positions before the last landmark form P_i', the rest the parts.
    cls.q = prof.landmarks.back();
    cls.t = cls.p - cls.q;
    const int n_ell = prof.landmark_positions.back();  // 1-based
    st.trace.require("reduce:tail-length", n_terms - n_ell == cls.t,
                     "terms=" + std::to_string(n_terms) + " n_ell=" + std::to_string(n_ell));

    int reduced_weight = 0;
    std::set<int> class_colors;
    for (int j = 0; j < n_ell - 1; ++j) {
      const FitTerm& term = seq.terms[static_cast<std::size_t>(j)];
      const int col = term_color[static_cast<std::size_t>(j)];
      st.trace.require("reduce:prefix-colored", col != 0);
      class_colors.insert(col);
      reduced_weight += term.weight;
      for (int v : term.vertices) {
        cls.reduced.push_back(v);
        st.c1[static_cast<std::size_t>(v)] = col;
      }
    }
    std::sort(cls.reduced.begin(), cls.reduced.end());
    st.trace.require("reduce:class-color-count",
                     static_cast<int>(class_colors.size()) <= cls.q,
                     "colors=" + std::to_string(class_colors.size()) +
                         " q=" + std::to_string(cls.q));
    st.trace.require("reduce:reduced-weight", reduced_weight >= cls.q * k,
                     "w(P')=" + std::to_string(reduced_weight));

    int tail_weight = 0;
    for (int j = n_ell - 1; j < n_terms; ++j) {
      const FitTerm& term = seq.terms[static_cast<std::size_t>(j)];
      st.trace.require("reduce:part-weight", term.weight >= 0 && term.weight < k);
      cls.parts.push_back(term.vertices);
      tail_weight += term.weight;
    }
    st.trace.require("reduce:part-count",
                     static_cast<int>(cls.parts.size()) == cls.t + 1);
    cls.x = tail_weight - cls.t * k;
    st.trace.require("reduce:excess-below-k", cls.x < k, "x=" + std::to_string(cls.x));
    if (cls.t == 0)
      st.trace.require("reduce:excess-nonnegative", cls.x >= 0, "x=" + std::to_string(cls.x));

    used_colors.insert(class_colors.begin(), class_colors.end());
    st.q += cls.q;
  }

  st.trace.begin_stage("reduce:summary");
  st.t_prime = st.t - st.p;
  st.trace.note("p", st.p);
  st.trace.note("q", st.q);
  st.trace.note("t_prime", st.t_prime);
  st.trace.require("reduce:slack-positive", st.t_prime >= 1);
  long long excess = 0;
  for (const ClassReduction& cls : st.classes) excess += cls.x;
  st.trace.require("reduce:slack-capacity",
                   static_cast<long long>(k) * st.t_prime > excess,
                   "k*t'=" + std::to_string(static_cast<long long>(k) * st.t_prime) +
                       " sum x=" + std::to_string(excess));

  // Palette bound per class: colors used outside S_i stay within
  // |S| - |S ∩ S_i| + q - q_i.
  for (int i = 0; i < chi; ++i) {
    std::set<int> outside;
    for (int v = 0; v < st.graph.vertex_count(); ++v)
      if (st.c1[static_cast<std::size_t>(v)] != 0 && st.class_of[static_cast<std::size_t>(v)] != i)
        outside.insert(st.c1[static_cast<std::size_t>(v)]);
    const int bound = s_size - st.precolored_in_class(i) + st.q -
                      st.classes[static_cast<std::size_t>(i)].q;
    st.trace.require("reduce:palette", static_cast<int>(outside.size()) <= bound,
                     "class " + std::to_string(i) + ": " + std::to_string(outside.size()) +
                         " > " + std::to_string(bound));
  }
  return st;
}

}  // namespace chromcon
