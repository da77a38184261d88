#ifndef CHROMCON_COLORING_HPP
#define CHROMCON_COLORING_HPP

#include <vector>

#include "chromcon/graph.hpp"

namespace chromcon {

/// A palette of colors 1..size.
struct ColorSet {
  int size = 0;
  bool contains(int color) const { return color >= 1 && color <= size; }
  bool operator==(const ColorSet&) const = default;
};

/// Total color assignment for a specific graph; colors[v] in 1..|C|.
struct Coloring {
  std::vector<int> colors;
  bool operator==(const Coloring&) const = default;
};

/// Direct definition check, independent of any solver path.
bool is_proper(const Graph& g, const Coloring& f);
bool is_proper(const Graph& g, const Coloring& f, const ColorSet& c);

}  // namespace chromcon

#endif
