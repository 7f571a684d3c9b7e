#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "sccol/colourings.hpp"
#include "sccol/complex.hpp"
#include "sccol/graph.hpp"
#include "sccol/partitions.hpp"
#include "sccol/sullivan.hpp"

namespace sccol {

using Json = nlohmann::json;

/// Complex sources: ".cx" text (one facet per line, whitespace-separated
/// labels, '#' comments) or JSON {"facets": [[...], ...]}. Files are
/// sniffed by their first non-space character.
SimplicialComplex parse_cx_text(std::istream& in);
SimplicialComplex complex_from_json(const Json& j);
SimplicialComplex read_complex_file(const std::string& path);
Json complex_to_json(const SimplicialComplex& x);

/// Graph sources: JSON {"vertices": [...], "edges": [["u","v"], ...]} or
/// adjacency-matrix text (first line n, then n rows of 0/1; vertices are
/// named v1..vn). Sniffed the same way.
Graph graph_from_json(const Json& j);
Graph parse_adjacency_text(std::istream& in);
Graph read_graph_file(const std::string& path);
Json graph_to_json(const Graph& g);
std::string graph_to_dot(const Graph& g);
std::string graph_to_adjacency_text(const Graph& g);

/// Assignments: {"k": 3, "domain": "vertices"|"faces"|"both"|"dim:r",
/// "colours": {...}}.
Assignment assignment_from_json(const Json& j);
Json assignment_to_json(const Assignment& a);
Assignment read_assignment_file(const std::string& path);

Json colouring_to_json(const GraphColouring& c);
GraphColouring colouring_from_json(const Json& j);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json presentation_to_json(const SullivanPresentation& s);
Json model_to_json(const SchemeModel& m);
std::string presentation_to_text(const SullivanPresentation& s);
std::string model_to_text(const SchemeModel& m);

} // namespace sccol
