#ifndef CHROMCON_EXTENSION_HPP
#define CHROMCON_EXTENSION_HPP

#include <vector>

#include "chromcon/coloring.hpp"
#include "chromcon/graph.hpp"
#include "chromcon/reduction.hpp"
#include "chromcon/templates.hpp"
#include "chromcon/trace.hpp"

namespace chromcon {

/// Smallest color count the strong pipeline accepts: ceil((3+1/16)k) - 1.
int strong_palette_floor(int k);

struct ExtensionResult {
  Coloring coloring;  // on the input graph, verified proper and respecting
  TraceLog trace;
  /// True if any greedy distinct-color step needed the matching fallback;
  /// the constructions promise this never happens.
  bool used_fallback = false;
  /// Strong pipeline only: which closing branch colored the heavy classes
  /// (1 = small slack, 2 = two-phase, 3 = final bound). 0 otherwise.
  int final_branch = 0;
};

/// Builds a proper coloring respecting a good template when |C| >= 4k-2
/// and the partition has at most |C|-2k+1 classes: classes of weight >= k
/// are split by the bounded partition into p_i parts on fresh colors, the
/// heavy remaining classes are colored greedily in descending weight, and
/// the light ones from their leftover pools.
ExtensionResult extend_4k(const Graph& g, const Template& t,
                          const std::vector<std::vector<int>>& partition, int k,
                          const ColorSet& c);

/// The full pipeline for |C| >= ceil((3+1/16)k)-1 and at most |C|-2k+2
/// classes: class reduction, iterated augmentation of the cheaply colorable
/// class set, coloring of the non-minimal parts, then the three-branch
/// closing assignment of the lightest parts. Every stage's palette bound is
/// checked at runtime with exact integer arithmetic.
ExtensionResult extend_316k(const Graph& g, const Template& t,
                            const std::vector<std::vector<int>>& partition, int k,
                            const ColorSet& c);

}  // namespace chromcon

#endif
