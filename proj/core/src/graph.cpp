#include "rgl/graph.hpp"

#include <algorithm>
#include <string>

#include "rgl/errors.hpp"

namespace rgl {

VertexSet::VertexSet(std::initializer_list<int> vs) {
  for (int v : vs) {
    if (v < 0 || v >= kMaxVertices) throw InputError("vertex out of range");
    bits_ |= bit(v);
  }
}

VertexSet VertexSet::from_list(const VertexList& vs) {
  VertexSet s;
  for (int v : vs) {
    if (v < 0 || v >= kMaxVertices) throw InputError("vertex out of range");
    s.insert(v);
  }
  return s;
}

VertexList VertexSet::members() const {
  VertexList out;
  out.reserve(size());
  for_each_bit(bits_, [&](int v) { out.push_back(v); });
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw InputError("negative vertex count");
  if (n > kMaxVertices)
    throw CapacityError("graph order " + std::to_string(n) + " exceeds the " +
                        std::to_string(kMaxVertices) + "-vertex kernel cap");
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::initializer_list<Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

int Graph::size() const {
  int twice = 0;
  for (Mask row : adj_) twice += popcount(row);
  return twice / 2;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = n_;
  for (Mask row : adj_) d = std::min(d, popcount(row));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (Mask row : adj_) d = std::max(d, popcount(row));
  return d;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw InputError("vertex " + std::to_string(v) + " outside 0.." +
                     std::to_string(n_ - 1));
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for_each_bit(adj_[u] & ~low_mask(u + 1), [&](int v) { out.push_back({u, v}); });
  }
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph h(n);
  for (int u = 0; u < n; ++u) {
    for_each_bit(~g.neighbors(u) & g.vertices() & ~low_mask(u + 1),
                 [&](int v) { h.add_edge(u, v); });
  }
  return h;
}

InducedSubgraph induced(const Graph& g, VertexSet s) {
  if (s.bits() & ~g.vertices()) throw InputError("induced: vertex set leaves the vertex range");
  InducedSubgraph out;
  out.original = s.members();
  const int m = static_cast<int>(out.original.size());
  out.graph = Graph(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (g.adjacent(out.original[i], out.original[j])) out.graph.add_edge(i, j);
    }
  }
  return out;
}

Graph graph_union(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) throw InputError("graph_union: vertex counts differ");
  Graph h = a;
  for (const Edge& e : b.edges()) h.add_edge(e.u, e.v);
  return h;
}

Graph graph_difference(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) throw InputError("graph_difference: vertex counts differ");
  Graph h = a;
  for (const Edge& e : b.edges()) h.remove_edge(e.u, e.v);
  return h;
}

Mask reachable(const Graph& g, int v, Mask within) {
  Mask seen = bit(v);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for_each_bit(frontier, [&](int w) { next |= g.neighbors(w); });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  Mask left = g.vertices();
  while (left) {
    Mask comp = reachable(g, lowest(left), left);
    out.emplace_back(comp);
    left &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

}  // namespace rgl
