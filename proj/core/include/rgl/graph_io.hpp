#pragma once

#include <string>
#include <string_view>

#include "rgl/graph.hpp"

namespace rgl {

/// Header-less graph6, n <= 64 (one- or four-byte size prefix).
std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" header and trailing whitespace.
Graph from_graph6(std::string_view text);

/// "n m" header line, then m lines "u v" (0-indexed).
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

/// Dispatches on content: an edge list when the first token line holds two
/// integers, otherwise graph6. Throws ParseError on empty input.
Graph parse_graph(std::string_view text);

}  // namespace rgl
