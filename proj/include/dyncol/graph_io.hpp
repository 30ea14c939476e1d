#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "dyncol/graph.hpp"

namespace dyncol {

// graph6 (one graph, no trailing newline). Supports the 1-, 4- and 8-byte
// size prefixes.
std::string to_graph6(const Graph& g);
// Accepts an optional ">>graph6<<" header and surrounding whitespace.
Graph from_graph6(std::string_view text);

// Edge-list text: a first line holding the vertex count, then one "u v"
// line per edge (u < v, lexicographic order). Ids are 0-based.
std::string to_edge_list(const Graph& g);
// Reads "u v" lines. A line with a single integer before any edge sets the
// vertex count; otherwise it is max id + 1. '#' starts a comment.
Graph from_edge_list(std::string_view text);

enum class GraphFormat { Graph6, EdgeList };

// graph6 when the first significant byte is in the printable graph6 range
// (63..126) or a ">>graph6<<" header is present; edge list otherwise.
GraphFormat detect_format(std::string_view text);
Graph parse_graph(std::string_view text);

// Reads a whole file, "-" meaning standard input.
std::string read_text(const std::string& path);

} // namespace dyncol
