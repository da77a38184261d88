#ifndef CHROMCON_GENERATORS_HPP
#define CHROMCON_GENERATORS_HPP

#include <cstdint>

#include "chromcon/graph.hpp"

namespace chromcon {

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// Star on n vertices: vertex 0 is the center, 1..n-1 are leaves.
Graph star_graph(int n);
/// Wheel on n+1 vertices: cycle 0..n-1 plus hub n joined to every rim vertex.
Graph wheel_graph(int rim);
Graph petersen_graph();

/// splitmix64 step; the documented PRNG behind random_graph.
std::uint64_t splitmix64(std::uint64_t& state);

/// Seeded G(n, p). Pairs are visited in lexicographic order (0,1), (0,2), ...,
/// (n-2,n-1); for each pair one splitmix64 draw x is taken and the edge is
/// present iff (x >> 11) * 2^-53 < p. Identical (n, p, seed) always produce
/// identical graphs, on every platform.
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace chromcon

#endif
