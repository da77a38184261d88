#include "chromcon/constructions.hpp"

#include <stdexcept>

#include "chromcon/generators.hpp"

namespace chromcon {

ConstructionInstance star_witness(int k) {
  if (k < 1) throw std::invalid_argument("star_witness: need k >= 1");
  ConstructionInstance inst;
  inst.k = k;
  inst.colors = ColorSet{3 * k - 2};
  inst.graph = star_graph(2 * k);
  inst.tmpl = empty_template(2 * k);
  for (int leaf = 1; leaf < 2 * k; ++leaf) inst.tmpl.precolor[leaf] = leaf;
  for (int col = 2 * k; col <= 3 * k - 2; ++col) inst.tmpl.forbidden[0].push_back(col);
  inst.expected_chi = 2;
  inst.label = "star";
  return inst;
}

ConstructionInstance h_construction(int k, int csize) {
  if (k < 1) throw std::invalid_argument("h_construction: need k >= 1");
  if (csize < 2 * k - 1)
    throw std::invalid_argument("h_construction: need csize >= 2k-1");
  const int stable = 2 * k - 1;
  const int clique = csize - 2 * k + 2;  // m - 2 where m = csize - 2k + 4
  ConstructionInstance inst;
  inst.k = k;
  inst.colors = ColorSet{csize};
  inst.graph = Graph(stable + clique);
  for (int a = 0; a < clique; ++a)
    for (int b = a + 1; b < clique; ++b) inst.graph.add_edge(stable + a, stable + b);
  for (int s = 0; s < stable; ++s)
    for (int a = 0; a < clique; ++a) inst.graph.add_edge(s, stable + a);
  inst.tmpl = empty_template(stable + clique);
  for (int s = 0; s < stable; ++s) inst.tmpl.precolor[s] = s + 1;
  inst.expected_chi = csize - 2 * k + 3;  // = m - 1
  inst.label = "h_construction";
  return inst;
}

}  // namespace chromcon
