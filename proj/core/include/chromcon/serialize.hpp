#ifndef CHROMCON_SERIALIZE_HPP
#define CHROMCON_SERIALIZE_HPP

#include <string>
#include <vector>

#include "chromcon/coloring.hpp"
#include "chromcon/graph.hpp"
#include "chromcon/oracle.hpp"
#include "chromcon/templates.hpp"
#include "chromcon/trace.hpp"

namespace chromcon {

/// Template JSON: {"S": [vertices], "c": [parallel colors],
/// "F": {"vertex": [sorted colors], ...}}. Vertices with empty forbidden
/// sets are omitted from "F". Emission is deterministic, so
/// serialize(parse(x)) reproduces x byte for byte for canonical input.
std::string template_to_json(const Template& t);

/// Parses and validates against the graph and palette; properness
/// violations are rejected naming the offending vertex pair.
Template template_from_json(const std::string& text, const Graph& g, const ColorSet& c);

/// Colorings serialize as the bare array of color indices.
std::string coloring_to_json(const Coloring& f);
Coloring coloring_from_json(const std::string& text);

std::string trace_to_json(const TraceLog& trace);

std::string gbound_records_to_json(const std::vector<GBoundRecord>& records);
std::string gbound_records_to_csv(const std::vector<GBoundRecord>& records);

}  // namespace chromcon

#endif
