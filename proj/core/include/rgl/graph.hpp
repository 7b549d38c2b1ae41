#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <vector>

namespace rgl {

/// Hard vertex cap of the search kernel: one 64-bit block per adjacency row.
inline constexpr int kMaxVertices = 64;

using Mask = std::uint64_t;
using VertexList = std::vector<int>;

constexpr Mask bit(int v) { return Mask{1} << v; }
constexpr Mask low_mask(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

/// Calls f(v) for each set bit v in ascending order.
template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

struct Edge {
  int u = 0;
  int v = 0;  // u < v
  auto operator<=>(const Edge&) const = default;
};

/// Subset of {0..n-1} stored as a bit mask.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(Mask bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vs);
  static VertexSet from_list(const VertexList& vs);

  Mask bits() const { return bits_; }
  int size() const { return popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int v) const { return v >= 0 && v < 64 && (bits_ & bit(v)); }
  void insert(int v) { bits_ |= bit(v); }
  void erase(int v) { bits_ &= ~bit(v); }
  /// Members in ascending order.
  VertexList members() const;

  bool operator==(const VertexSet&) const = default;

 private:
  Mask bits_ = 0;
};

/// Undirected simple graph on 0..n-1, adjacency rows as bit masks.
/// Value type; never mutated once handed to a search.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices. Throws CapacityError above kMaxVertices.
  explicit Graph(int n);
  Graph(int n, std::initializer_list<Edge> edges);
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  int size() const;
  Mask vertices() const { return low_mask(n_); }

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  Mask neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  /// 0 for the empty graph.
  int min_degree() const;
  int max_degree() const;

  /// Throws InputError on self-loops or out-of-range endpoints.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Edges sorted by (min endpoint, max endpoint).
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<Mask> adj_;
};

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the host label of local vertex i (ascending).
  VertexList original;
};

/// Relabels s ascending to 0..|s|-1. Throws InputError if s leaves range.
InducedSubgraph induced(const Graph& g, VertexSet s);

/// Spanning union of two graphs on the same vertex count.
Graph graph_union(const Graph& a, const Graph& b);
/// Edges of a not in b.
Graph graph_difference(const Graph& a, const Graph& b);

/// Components ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
/// Vertices reachable from v inside `within` (v must be in `within`).
Mask reachable(const Graph& g, int v, Mask within);

// Cliques and independent sets. "find" routines return the
// lexicographically least witness under ascending vertex order.

std::optional<VertexSet> find_clique(const Graph& g, int size);
/// Equal to find_clique(complement(g), size).
std::optional<VertexSet> find_independent_set(const Graph& g, int size);
/// Calls f(set) for every independent set of exactly `size` vertices in
/// lexicographic order until f returns false or `limit` sets were seen.
/// Returns the number of sets visited.
long long for_each_independent_set(const Graph& g, int size, long long limit,
                                   const std::function<bool(VertexSet)>& f);
int clique_number(const Graph& g);
int independence_number(const Graph& g);
/// True iff the subgraph induced on `candidates` has a clique of `size`.
bool has_clique_within(const Graph& g, Mask candidates, int size);

// Paths and cycles.

/// Maximum-order path. Exact subset DP per component; components larger
/// than kMaxExactPathComponent throw CapacityError (use find_path then).
VertexList longest_path(const Graph& g);
inline constexpr int kMaxExactPathComponent = 24;

/// Lexicographically least path on exactly t vertices, or none. Exhaustive
/// branch and bound; absence is always proven. t <= 0 yields the empty path.
std::optional<VertexList> find_path(const Graph& g, int t);
inline bool has_path(const Graph& g, int t) { return find_path(g, t).has_value(); }

/// Cycle through every vertex (n >= 3) or none. Subset DP, n <= 24.
std::optional<VertexList> hamiltonian_cycle(const Graph& g);

// Colorings.

struct ProperColoring {
  std::vector<int> color_of;
  int colors = 0;

  /// Color classes in color order.
  std::vector<VertexSet> classes() const;
};

/// Relabels colors by first occurrence in ascending vertex order.
ProperColoring canonical(ProperColoring c);

struct ChromaticResult {
  int chi = 0;
  ProperColoring coloring;
};

ChromaticResult chromatic_number(const Graph& g);

inline constexpr int kDefaultSurplusBound = 12;
/// Minimum colour-class size over all proper chi-colourings.
/// Throws CapacityError when n > bound, InputError when n == 0.
int chromatic_surplus(const Graph& g, int bound = kDefaultSurplusBound);

/// Colouring that meets Brooks' bound: n colours for complete graphs,
/// 3 for odd cycles, otherwise at most max_degree(g) (at most 2 when
/// max_degree < 3). Throws InputError on disconnected input.
ProperColoring brooks_coloring(const Graph& g);

enum class BrooksClass { Complete, OddCycle, Neither };
BrooksClass classify_brooks(const Graph& g);
const char* to_string(BrooksClass c);

// Lemma-backed path routines. Each checks its precondition (InputError)
// and its conclusion (InvariantError with the graph6 of the instance).

/// delta >= floor(n/(k+1)) implies a path on >= ceil(n/k) vertices.
VertexList min_degree_long_path(const Graph& g, int k);
/// Connected with n >= 2*delta+1 implies a path on >= 2*delta+1 vertices.
VertexList erdos_gallai_path(const Graph& g);

struct PathFreePartition {
  std::vector<VertexSet> parts;
  /// Hamiltonian cycle of each part; a two-vertex part lists its edge.
  std::vector<VertexList> cycles;
};

/// P_d-free with delta >= floor(d/2): components are Hamiltonian and have
/// between floor(d/2)+1 and d-1 vertices.
PathFreePartition path_free_partition(const Graph& g, int d);

}  // namespace rgl
