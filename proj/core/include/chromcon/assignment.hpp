#ifndef CHROMCON_ASSIGNMENT_HPP
#define CHROMCON_ASSIGNMENT_HPP

#include <vector>

namespace chromcon {

struct DistinctAssignment {
  std::vector<int> colors;  // one per pool, pairwise distinct
  /// True when the greedy pass got stuck and the bipartite-matching
  /// fallback completed the assignment. The construction proofs promise
  /// the greedy always suffices, so this flags a transcription bug.
  bool used_fallback = false;
};

/// Assigns pairwise distinct colors, one from each pool, avoiding
/// `already_used`. Pools are processed in the given order, greedily taking
/// the least available color; a system-of-distinct-representatives search
/// backs the greedy. Throws std::logic_error when no assignment exists.
DistinctAssignment assign_distinct_colors(const std::vector<std::vector<int>>& pools,
                                          const std::vector<int>& already_used = {});

/// Colors m+1 pools with at most m distinct colors: the lexicographically
/// least pair of pools sharing a color both take their least common color,
/// every other pool takes its own least color. Requires nonempty pools and
/// a sharing pair (the pigeonhole situation of the window arguments).
std::vector<int> assign_with_shared_pair(const std::vector<std::vector<int>>& pools);

}  // namespace chromcon

#endif
