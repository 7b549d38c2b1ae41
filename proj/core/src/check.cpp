#include "rgl/check.hpp"

#include <vector>

namespace rgl::check {

bool distinct_in_range(const Graph& g, const VertexList& vs) {
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (int v : vs) {
    if (v < 0 || v >= g.order() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool is_clique(const Graph& g, const VertexList& vs) {
  if (!distinct_in_range(g, vs)) return false;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

bool is_independent(const Graph& g, const VertexList& vs) {
  if (!distinct_in_range(g, vs)) return false;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) return false;
  return true;
}

bool is_path(const Graph& g, const VertexList& vs) {
  if (!distinct_in_range(g, vs)) return false;
  for (std::size_t i = 1; i < vs.size(); ++i)
    if (!g.adjacent(vs[i - 1], vs[i])) return false;
  return true;
}

bool is_cycle(const Graph& g, const VertexList& vs) {
  return vs.size() >= 3 && is_path(g, vs) && g.adjacent(vs.front(), vs.back());
}

bool is_proper_coloring(const Graph& g, const ProperColoring& c) {
  if (static_cast<int>(c.color_of.size()) != g.order()) return false;
  std::vector<bool> used(static_cast<std::size_t>(c.colors), false);
  for (int v = 0; v < g.order(); ++v) {
    int col = c.color_of[v];
    if (col < 0 || col >= c.colors) return false;
    used[col] = true;
    for (int w = v + 1; w < g.order(); ++w)
      if (g.adjacent(v, w) && c.color_of[w] == col) return false;
  }
  for (bool u : used)
    if (!u) return false;
  return true;
}

}  // namespace rgl::check
