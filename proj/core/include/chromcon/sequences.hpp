#ifndef CHROMCON_SEQUENCES_HPP
#define CHROMCON_SEQUENCES_HPP

#include <cstddef>
#include <vector>

namespace chromcon {

/// A stable set of the ambient graph together with per-vertex weights
/// (forbidden-color counts, frozen at construction).
struct WeightedClass {
  std::vector<int> vertices;
  std::vector<int> weights;  // parallel to vertices
  int total_weight() const;
};

struct FitTerm {
  std::vector<int> vertices;
  int weight = 0;
};

/// Ordered disjoint cover of a class by nonempty terms of weight in [0, k).
struct FitSequence {
  std::vector<FitTerm> terms;
  std::vector<int> cumulative_weights() const;  // w_1, ..., w_n
  int total_weight() const;
};

/// Per-term jump/non-jump tags. A term is a jump when the cumulative weight
/// crosses a multiple of k; the floor quotient at a non-jump is a landmark.
struct JumpProfile {
  std::vector<bool> is_jump;
  std::vector<int> landmarks;           // floor value at each non-jump, in order
  std::vector<int> landmark_positions;  // 1-based term positions; equals landmark + rank
  int jump_count = 0;
};

/// Partitions a multiset of values in [0, k] with qk <= sum < (q+1)k into
/// exactly q parts of value-sum < 2k, by peeling a minimal descending
/// prefix of sum >= (q-1)k and recursing.
std::vector<std::vector<int>> partition_bounded(const std::vector<int>& values, int k, int q);

/// Same split but over item indices (ties broken by index), so callers can
/// partition vertex lists by their weights.
std::vector<std::vector<std::size_t>> partition_bounded_indices(const std::vector<int>& values,
                                                                int k, int q);

/// Singleton terms in ascending vertex order. Requires every weight < k.
FitSequence fit_singletons(const WeightedClass& p, int k);

/// Increasing critical sequence: term weights nondecreasing and no two
/// consecutive non-jumps. Built from weight-sorted singletons by merging
/// the leftmost consecutive non-jump pair and re-sorting until critical.
FitSequence critical_sequence(const WeightedClass& p, int k);

JumpProfile jump_profile(const FitSequence& s, int k);

/// Shape check: nonempty terms with weights in [0, k).
bool is_fit_sequence(const FitSequence& s, int k);

}  // namespace chromcon

#endif
