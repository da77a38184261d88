#include "chromcon/oracle.hpp"

#include <algorithm>
#include <map>

#include "chromcon/connectivity.hpp"
#include "chromcon/graph_io.hpp"
#include "chromcon/solver.hpp"

namespace chromcon {

namespace {

// Lexicographic size-subsets of 0..n-1, largest sizes first.
template <typename Visit>
void for_each_subset_desc(int n, int min_size, Visit&& visit) {
  VertexSet subset;
  auto dfs = [&](auto&& self, int from, int want) -> bool {
    if (want == 0) return visit(subset);
    for (int v = from; v <= n - want; ++v) {
      subset.push_back(v);
      const bool go_on = self(self, v + 1, want - 1);
      subset.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  for (int size = n; size >= std::max(min_size, 0); --size)
    if (!dfs(dfs, 0, size)) return;
}

}  // namespace

std::optional<VertexSet> find_connected_chromatic_subgraph(const Graph& g, int kappa,
                                                           int min_chi, int min_order,
                                                           const SubgraphBudget& budget) {
  const int n = g.vertex_count();
  // kappa-connectivity needs more than kappa vertices; chi >= min_chi needs
  // at least min_chi of them.
  const int smallest = std::max({min_order + 1, kappa + 1, min_chi, 1});
  std::optional<VertexSet> found;
  std::int64_t examined = 0;
  for_each_subset_desc(n, smallest, [&](const VertexSet& subset) {
    if (++examined > budget.max_subsets)
      throw BudgetExhausted("subgraph search: subset budget exhausted");
    const InducedSubgraph sub = induced_subgraph(g, subset);
    if (!vertex_connectivity_at_least(sub.graph, kappa)) return true;
    if (min_chi > 0 && find_coloring(sub.graph, ColorSet{min_chi - 1}, budget.solver))
      return true;  // chi below the target
    found = subset;
    return false;
  });
  return found;
}

OracleOutcome theorem_oracle(const Graph& g, int k, ExtractVariant variant,
                             const SubgraphBudget& budget) {
  OracleOutcome out;
  out.chi = chromatic_number(g, budget.solver);
  if (out.chi < extract_chi_floor(k, variant)) {
    out.status = OracleStatus::vacuous;
    return out;
  }
  const int chi_target =
      variant == ExtractVariant::strong ? out.chi - 2 * k + 2 : out.chi - 2 * k + 1;
  auto sub = find_connected_chromatic_subgraph(g, k + 1, chi_target, out.chi - k, budget);
  if (sub) {
    out.status = OracleStatus::holds;
    out.subgraph = *sub;
  } else {
    out.status = OracleStatus::fails;
  }
  return out;
}

std::vector<GBoundRecord> empirical_g(int k, int m, const std::vector<Graph>& catalog,
                                      const SubgraphBudget& budget) {
  const int upper = std::max(m + 2 * k - 2, (49 * k + 15) / 16);
  std::map<int, GBoundRecord> by_level;
  for (const Graph& g : catalog) {
    const int chi = chromatic_number(g, budget.solver);
    GBoundRecord& rec = by_level[chi];
    if (rec.n == 0) {
      rec.k = k;
      rec.m = m;
      rec.n = chi;
    }
    if (rec.verdict == GBoundRecord::Verdict::lower_bound_witness) continue;
    const bool qualifies =
        find_connected_chromatic_subgraph(g, k + 1, m, 0, budget).has_value();
    if (!qualifies) {
      rec.verdict = GBoundRecord::Verdict::lower_bound_witness;
      rec.witness_graph6 = to_graph6(g);
      if (chi >= upper) rec.upper_bound_violation = true;
    }
  }
  std::vector<GBoundRecord> out;
  out.reserve(by_level.size());
  for (auto& [level, rec] : by_level) out.push_back(std::move(rec));
  return out;
}

}  // namespace chromcon
