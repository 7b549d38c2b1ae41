#pragma once

#include <string>
#include <vector>

#include "rgl/arrowing.hpp"
#include "rgl/graph.hpp"
#include "rgl/thresholds.hpp"

namespace rgl {

/// Complete multipartite graph with part sizes differing by at most one,
/// larger parts first, vertices numbered part by part.
Graph turan_graph(int n, int parts);

/// The tight colouring at n = (r-1)(t-1)(k+1): Turán T_{r-1}(n) in red,
/// each part tiled by k+1 blue cliques of order t-1. Pairs inside a part
/// but in different cliques are non-edges.
struct ExtremalConstruction {
  GoodnessParams params;
  Graph graph;
  TwoColoring coloring;
  std::vector<VertexSet> parts;
  std::vector<VertexSet> cliques;
};

/// Throws InputError for r < 2, t < 2, k < 1; CapacityError past 64 vertices.
ExtremalConstruction build_extremal(int r, int t, int k);

struct CheckEntry {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckEntry> checks;
  bool all_pass() const;
  const CheckEntry* find(const std::string& name) const;
};

/// Named checks: "red_kr_free", "blue_pt_free", "min_degree", and the
/// structural "degree_profile" (every vertex at the extremal degree) and
/// "layout" (parts and cliques as documented).
ValidationReport validate_extremal(const ExtremalConstruction& e);

/// graph6 plus parts, cliques and blue edges.
std::string sidecar_json(const ExtremalConstruction& e);

}  // namespace rgl
