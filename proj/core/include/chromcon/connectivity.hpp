#ifndef CHROMCON_CONNECTIVITY_HPP
#define CHROMCON_CONNECTIVITY_HPP

#include <optional>

#include "chromcon/graph.hpp"

namespace chromcon {

bool is_connected(const Graph& g);

/// True iff |g| > kappa and no vertex set of size < kappa disconnects g.
/// Decided by counting vertex-disjoint paths (unit-capacity flow on split
/// vertices) over all non-adjacent pairs; complete graphs reduce to the
/// order check alone.
bool vertex_connectivity_at_least(const Graph& g, int kappa);

struct CutsetSplit {
  VertexSet cutset;  // X, possibly empty
  VertexSet side_a;  // nonempty, no edges to side_b
  VertexSet side_b;  // nonempty
};

/// Smallest-by-lex cutset X with |X| <= max_size, together with a split
/// (A, B) of the rest. X is the lexicographically least qualifying set by
/// sorted vertex list, and A the lexicographically least valid side.
std::optional<CutsetSplit> find_cutset(const Graph& g, int max_size);

}  // namespace chromcon

#endif
