#pragma once

#include "rgl/graph.hpp"

// Witness re-verification against raw adjacency queries only. Nothing here
// calls into the search routines, so a witness produced by a search is
// checked by code that shares no logic with it.
namespace rgl::check {

bool distinct_in_range(const Graph& g, const VertexList& vs);
bool is_clique(const Graph& g, const VertexList& vs);
bool is_independent(const Graph& g, const VertexList& vs);
/// Distinct vertices, consecutive pairs adjacent.
bool is_path(const Graph& g, const VertexList& vs);
/// is_path plus closing edge; at least 3 vertices.
bool is_cycle(const Graph& g, const VertexList& vs);
/// Proper, colours in 0..colors-1, every colour used.
bool is_proper_coloring(const Graph& g, const ProperColoring& c);

}  // namespace rgl::check
