#pragma once

#include <string>
#include <string_view>

#include "penta/graph.hpp"

namespace penta {

/// graph6 encoding (no header, no trailing newline).
std::string to_graph6(const Graph& g);

/// Parses one graph6 string. An optional ">>graph6<<" header and trailing
/// whitespace are accepted.
Graph from_graph6(std::string_view text);

/// "n m" followed by one "u v" line per edge, u < v, ascending.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

enum class GraphFormat { graph6, edgelist };

/// An "n m" first line means edge list; anything else is taken as graph6.
GraphFormat detect_format(std::string_view text);

Graph parse_graph(std::string_view text, GraphFormat format);
Graph parse_graph(std::string_view text);

}  // namespace penta
