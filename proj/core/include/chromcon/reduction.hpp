#ifndef CHROMCON_REDUCTION_HPP
#define CHROMCON_REDUCTION_HPP

#include <vector>

#include "chromcon/coloring.hpp"
#include "chromcon/graph.hpp"
#include "chromcon/templates.hpp"
#include "chromcon/trace.hpp"

namespace chromcon {

/// Input made uniform for the class pipelines: every class keeps a nonempty
/// uncolored part by appending isolated padding vertices (weight zero, no
/// constraints) to the graph. Padding vertices are dropped from emitted
/// colorings.
struct PaddedInstance {
  Graph graph;
  Template tmpl;
  std::vector<std::vector<int>> classes;  // stable classes, pads appended
  int original_n = 0;
};

/// Validates that `partition` is a list of disjoint stable sets covering g.
void validate_partition(const Graph& g, const std::vector<std::vector<int>>& partition);

PaddedInstance pad_empty_classes(const Graph& g, const Template& t,
                                 const std::vector<std::vector<int>>& partition);

/// Per-class outcome of the reduction: a reduced subset colored with few
/// colors and a bounded-weight partition of the rest.
struct ClassReduction {
  std::vector<int> members;             // P_i = S_i minus the precolored set
  int weight = 0;                       // w(P_i)
  int p = 0;                            // floor(w(P_i) / k)
  std::vector<int> reduced;             // P_i', weight >= q*k, colored by <= q colors
  int q = 0;
  int t = 0;                            // p - q
  std::vector<std::vector<int>> parts;  // t+1 parts of P_i \ P_i', each of weight < k
  /// w(P_i \ P_i') - t*k. Always below k; nonnegative whenever t = 0 (then
  /// it is the weight of the single part). For t >= 1 the reduced prefix
  /// may overshoot q*k slightly and push the excess below zero; such a
  /// class always fails the augmentation threshold and is colored there.
  int x = 0;
  int y = 0;  // weight of parts.front() once the lightest is swapped in
};

struct ReductionState {
  Graph graph;  // padded
  Template tmpl;
  ColorSet colors;
  int k = 1;
  int original_n = 0;
  std::vector<std::vector<int>> stable_classes;
  std::vector<ClassReduction> classes;
  std::vector<int> class_of;  // padded vertex -> class index
  int t = 0;        // 2k - |S|
  int p = 0;        // sum of p_i
  int q = 0;        // sum of q_i
  int t_prime = 0;  // t - p, at least 1
  /// Partial coloring of S u P^1 over the padded graph; 0 = uncolored.
  std::vector<int> c1;
  TraceLog trace;

  int weight_of(int v) const { return static_cast<int>(tmpl.forbidden[v].size()); }
  int precolored_in_class(int i) const;  // |S ∩ S_i|
};

/// The swap-and-recolor reduction, run class by class: builds an increasing
/// critical sequence of each uncolored class part, colors landmark windows
/// from the shared pool with one forced shared pair per window, and uses
/// the three-case bookkeeping (drop the last window term, or swap it with
/// the term whose color it duplicates) to end with P_i' colored by at most
/// q_i colors and the remainder split into t_i + 1 light parts.
/// Requires |C| >= 3k-1 and a good template of cost < 2k^2.
ReductionState reduce_classes(const Graph& g, const Template& t,
                              const std::vector<std::vector<int>>& partition, int k,
                              const ColorSet& c);

}  // namespace chromcon

#endif
