#pragma once

#include <vector>

#include "rgl/graph.hpp"

// Standard named graphs used by tests, the CLI and benchmarks.
namespace rgl::families {

Graph complete(int n);
Graph empty(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);
Graph complete_multipartite(const std::vector<int>& part_sizes);
Graph petersen();
Graph hypercube(int dim);
/// Vertex-disjoint union, relabelled block by block.
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace rgl::families
