#include "chromcon/generators.hpp"

#include <stdexcept>

namespace chromcon {

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(int n) {
  if (n < 2) throw std::invalid_argument("star_graph: need at least 2 vertices");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph wheel_graph(int rim) {
  if (rim < 3) throw std::invalid_argument("wheel_graph: need rim of at least 3");
  Graph g(rim + 1);
  for (int v = 0; v < rim; ++v) {
    g.add_edge(v, (v + 1) % rim);
    g.add_edge(v, rim);
  }
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int v = 0; v < 5; ++v) {
    g.add_edge(v, (v + 1) % 5);        // outer cycle
    g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
    g.add_edge(v, 5 + v);              // spokes
  }
  return g;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("random_graph: p must lie in [0, 1]");
  Graph g(n);
  std::uint64_t state = seed;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const std::uint64_t x = splitmix64(state);
      const double unit = static_cast<double>(x >> 11) * 0x1.0p-53;
      if (unit < p) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace chromcon
