#ifndef CHROMCON_EXTRACTION_HPP
#define CHROMCON_EXTRACTION_HPP

#include "chromcon/graph.hpp"
#include "chromcon/inextensibility.hpp"
#include "chromcon/trace.hpp"

namespace chromcon {

/// Guarantee flavors for the highly connected subgraph extraction.
/// strong: needs chi(g) >= ceil((3+1/16)k) and promises chi(H) >= chi-2k+2;
/// weak:   needs chi(g) >= 4k-1       and promises chi(H) >= chi-2k+1.
/// Both promise |H| > chi-k and (k+1)-connectivity.
enum class ExtractVariant { strong, weak };

int extract_chi_floor(int k, ExtractVariant variant);

struct ExtractionOutcome {
  VertexSet vertices;  // of the extracted subgraph, in input-graph ids
  Graph subgraph;
  Witness witness;     // certifies the inextensibility of the subgraph
  int input_chi = 0;
  int palette = 0;     // |C| = chi(g) - 1
  int subgraph_chi = 0;
  bool connectivity_ok = false;
  bool order_ok = false;
  bool chromatic_ok = false;
  bool certified_minimal = false;
  bool budget_exhausted = false;
  /// True when every oracle-checked guarantee held. A heuristic shrink that
  /// misses a guarantee is reported with this flag false, never silently.
  bool all_guarantees_ok = false;
  TraceLog trace;
};

/// The end-to-end extraction: sets |C| = chi(g)-1, starts from the empty
/// template (which witnesses inextensibility), shrinks to a minimally
/// inextensible induced subgraph, and re-verifies order, connectivity, and
/// chromatic number of the result with the exact oracles.
ExtractionOutcome extract_subgraph(const Graph& g, int k, ExtractVariant variant,
                                   ShrinkMode mode = ShrinkMode::heuristic,
                                   const EnumerationBudget& budget = {});

}  // namespace chromcon

#endif
