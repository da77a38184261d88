#ifndef CHROMCON_CONSTRUCTIONS_HPP
#define CHROMCON_CONSTRUCTIONS_HPP

#include <string>

#include "chromcon/graph.hpp"
#include "chromcon/inextensibility.hpp"

namespace chromcon {

/// A packaged tightness example: graph, witnessing template, palette,
/// and its exact chromatic number.
struct ConstructionInstance {
  Graph graph;
  Template tmpl;
  ColorSet colors;
  int k = 1;
  int expected_chi = 0;
  std::string label;
};

/// Star on 2k vertices over |C| = 3k-2 colors: the 2k-1 leaves are
/// precolored with distinct colors and the center forbids the k-1 colors
/// the leaves do not use, so its palette is empty. Shows that fewer than
/// 3k-1 colors cannot force any 2-connected subgraph. Vertex 0 is the
/// center.
ConstructionInstance star_witness(int k);

/// Stable set of 2k-1 precolored vertices completely joined to a clique on
/// csize-2k+2 vertices, over |C| = csize colors: the clique needs one more
/// color than the palette leaves available, and the chromatic number is
/// exactly csize-2k+3, which is why the strong pipeline's guarantee cannot
/// be raised. Vertices 0..2k-2 are the stable set.
ConstructionInstance h_construction(int k, int csize);

}  // namespace chromcon

#endif
