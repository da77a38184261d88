#ifndef CHROMCON_GRAPH_IO_HPP
#define CHROMCON_GRAPH_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "chromcon/graph.hpp"

namespace chromcon {

/// graph6: the bit-packed ASCII encoding used by the standard small-graph
/// catalogs. Parsing accepts both the one-byte and the '~'-prefixed order
/// headers; emission uses the shortest form. Round-trips are bit-exact.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);

/// Plain edge-list text: "n m" header, then one "u v" pair per line,
/// 0-indexed. Emission writes edges sorted with u < v.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text);

/// Reads one graph6 value per non-empty line.
std::vector<Graph> read_graph6_lines(std::istream& in);

}  // namespace chromcon

#endif
