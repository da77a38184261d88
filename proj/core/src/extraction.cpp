#include "chromcon/extraction.hpp"

#include <stdexcept>
#include <string>

#include "chromcon/connectivity.hpp"
#include "chromcon/solver.hpp"

namespace chromcon {

int extract_chi_floor(int k, ExtractVariant variant) {
  return variant == ExtractVariant::strong ? (49 * k + 15) / 16 : 4 * k - 1;
}

ExtractionOutcome extract_subgraph(const Graph& g, int k, ExtractVariant variant,
                                   ShrinkMode mode, const EnumerationBudget& budget) {
  if (k < 1) throw std::invalid_argument("extract_subgraph: need k >= 1");
  const int chi = chromatic_number(g, budget.solver);
  const int floor = extract_chi_floor(k, variant);
  if (chi < floor)
    throw std::invalid_argument("extract_subgraph: needs chi(g) >= " + std::to_string(floor) +
                                ", got " + std::to_string(chi));

  ExtractionOutcome out;
  out.input_chi = chi;
  out.palette = chi - 1;
  const ColorSet colors{chi - 1};
  out.trace.begin_stage("extract:shrink");
  out.trace.note("chi", chi);
  out.trace.note("palette", colors.size);

  // chi(g) > |C| makes the empty template a witness for free.
  Witness start = make_witness(g, empty_template(g.vertex_count()), k, colors);
  MinimalInextensible m =
      minimal_inextensible_subgraph(g, k, colors, mode, std::move(start), budget);

  out.vertices = m.vertices;
  out.subgraph = m.subgraph;
  out.witness = m.witness;
  out.certified_minimal = m.minimal_certified;
  out.budget_exhausted = m.budget_exhausted;

  out.trace.begin_stage("extract:verify");
  out.subgraph_chi = chromatic_number(out.subgraph, budget.solver);
  const int chi_target =
      variant == ExtractVariant::strong ? chi - 2 * k + 2 : chi - 2 * k + 1;
  out.connectivity_ok = vertex_connectivity_at_least(out.subgraph, k + 1);
  out.order_ok = out.subgraph.vertex_count() > chi - k;
  out.chromatic_ok = out.subgraph_chi >= chi_target;
  out.trace.record("extract:connectivity", out.connectivity_ok);
  out.trace.record("extract:order", out.order_ok);
  out.trace.record("extract:chromatic", out.chromatic_ok,
                   "chi(H)=" + std::to_string(out.subgraph_chi) +
                       " target=" + std::to_string(chi_target));
  out.all_guarantees_ok = out.connectivity_ok && out.order_ok && out.chromatic_ok;
  return out;
}

}  // namespace chromcon
