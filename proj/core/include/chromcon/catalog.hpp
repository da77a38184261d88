#ifndef CHROMCON_CATALOG_HPP
#define CHROMCON_CATALOG_HPP

#include <cstdint>
#include <vector>

#include "chromcon/graph.hpp"

namespace chromcon {

/// Canonical form for graphs on up to 11 vertices: the minimum over all
/// vertex orderings of the column-major upper-triangle adjacency bits,
/// packed most-significant-first. Equal codes iff isomorphic.
std::uint64_t canonical_code(const Graph& g);

/// Inverse of the packing for a given order.
Graph graph_from_code(int n, std::uint64_t code);

/// All non-isomorphic graphs on exactly n vertices (n <= 11 supported,
/// practical up to 9), grown vertex-by-vertex with canonical-form
/// deduplication; returned sorted by canonical code.
std::vector<Graph> all_graphs(int n);

/// The connected members of all_graphs(n).
std::vector<Graph> connected_graphs(int n);

}  // namespace chromcon

#endif
