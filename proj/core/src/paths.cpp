#include <algorithm>
#include <cstdint>
#include <string>

#include "rgl/errors.hpp"
#include "rgl/graph.hpp"
#include "rgl/graph_io.hpp"

namespace rgl {
namespace {

// Local (component-relative) adjacency for the subset DPs.
struct LocalGraph {
  VertexList original;
  std::vector<std::uint32_t> adj;
};

LocalGraph localize(const Graph& g, Mask comp) {
  LocalGraph lg;
  lg.original = VertexSet(comp).members();
  const int c = static_cast<int>(lg.original.size());
  lg.adj.assign(c, 0);
  for (int i = 0; i < c; ++i) {
    for (int j = 0; j < c; ++j) {
      if (g.adjacent(lg.original[i], lg.original[j])) lg.adj[i] |= std::uint32_t{1} << j;
    }
  }
  return lg;
}

inline std::uint32_t ubit(int v) { return std::uint32_t{1} << v; }

// ends[mask] = set of vertices at which some path covering exactly mask ends.
VertexList longest_in_component(const LocalGraph& lg) {
  const int c = static_cast<int>(lg.original.size());
  if (c <= 2) return lg.original;
  const std::uint32_t full = (c == 32) ? ~std::uint32_t{0} : ubit(c) - 1;
  std::vector<std::uint32_t> ends(std::size_t{1} << c, 0);
  for (int v = 0; v < c; ++v) ends[ubit(v)] = ubit(v);

  std::uint32_t best = 1;
  int best_count = 1;
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    std::uint32_t e = ends[mask];
    if (!e) continue;
    int count = std::popcount(mask);
    if (count > best_count) {
      best_count = count;
      best = mask;
      if (count == c) break;
    }
    while (e) {
      int v = std::countr_zero(e);
      e &= e - 1;
      std::uint32_t ext = lg.adj[v] & ~mask;
      while (ext) {
        int w = std::countr_zero(ext);
        ext &= ext - 1;
        ends[mask | ubit(w)] |= ubit(w);
      }
    }
  }

  VertexList path;
  std::uint32_t mask = best;
  int cur = std::countr_zero(ends[mask]);
  path.push_back(lg.original[cur]);
  while (std::popcount(mask) > 1) {
    std::uint32_t prev = mask & ~ubit(cur);
    int p = std::countr_zero(ends[prev] & lg.adj[cur]);
    path.push_back(lg.original[p]);
    mask = prev;
    cur = p;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

struct PathSearch {
  const Graph& g;
  int target;
  VertexList path;

  bool extend(Mask visited) {
    const int len = static_cast<int>(path.size());
    if (len == target) return true;
    const int end = path.back();
    Mask room = reachable(g, end, ~visited | bit(end));
    if (popcount(room) - 1 < target - len) return false;
    Mask next = g.neighbors(end) & ~visited;
    while (next) {
      int w = lowest(next);
      next &= next - 1;
      path.push_back(w);
      if (extend(visited | bit(w))) return true;
      path.pop_back();
    }
    return false;
  }
};

std::string instance_tag(const Graph& g) { return " [graph6 " + to_graph6(g) + "]"; }

bool all_components_exact(const Graph& g) {
  for (const VertexSet& c : connected_components(g)) {
    if (c.size() > kMaxExactPathComponent) return false;
  }
  return true;
}

// Exact longest path when feasible, else a proven path of `target` vertices.
VertexList path_of_at_least(const Graph& g, int target) {
  if (all_components_exact(g)) return longest_path(g);
  return find_path(g, target).value_or(VertexList{});
}

}  // namespace

VertexList longest_path(const Graph& g) {
  VertexList best;
  for (const VertexSet& comp : connected_components(g)) {
    if (comp.size() > kMaxExactPathComponent)
      throw CapacityError("longest_path: component of " + std::to_string(comp.size()) +
                          " vertices exceeds the exact DP bound; use find_path");
    if (comp.size() <= static_cast<int>(best.size())) continue;
    VertexList p = longest_in_component(localize(g, comp.bits()));
    if (p.size() > best.size()) best = std::move(p);
  }
  return best;
}

std::optional<VertexList> find_path(const Graph& g, int t) {
  if (t <= 0) return VertexList{};
  for (const VertexSet& comp : connected_components(g)) {
    if (comp.size() < t) continue;
    for (int s : comp.members()) {
      PathSearch search{g, t, {s}};
      if (search.extend(bit(s))) return search.path;
    }
  }
  return std::nullopt;
}

std::optional<VertexList> hamiltonian_cycle(const Graph& g) {
  const int n = g.order();
  if (n > kMaxExactPathComponent)
    throw CapacityError("hamiltonian_cycle: " + std::to_string(n) +
                        " vertices exceeds the exact DP bound");
  if (n < 3 || !is_connected(g) || g.min_degree() < 2) return std::nullopt;
  LocalGraph lg = localize(g, g.vertices());
  const std::uint32_t full = ubit(n) - 1;
  // Paths start at vertex 0; ends[mask] for masks containing 0.
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  ends[1] = 1;
  for (std::uint32_t mask = 1; mask <= full; mask += 2) {
    std::uint32_t e = ends[mask];
    while (e) {
      int v = std::countr_zero(e);
      e &= e - 1;
      std::uint32_t ext = lg.adj[v] & ~mask;
      while (ext) {
        int w = std::countr_zero(ext);
        ext &= ext - 1;
        ends[mask | ubit(w)] |= ubit(w);
      }
    }
  }
  std::uint32_t closing = ends[full] & lg.adj[0];
  if (!closing) return std::nullopt;
  VertexList cycle;
  std::uint32_t mask = full;
  int cur = std::countr_zero(closing);
  while (cur != 0) {
    cycle.push_back(cur);
    std::uint32_t prev = mask & ~ubit(cur);
    cur = std::countr_zero(ends[prev] & lg.adj[cur]);
    mask = prev;
  }
  cycle.push_back(0);
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

VertexList min_degree_long_path(const Graph& g, int k) {
  if (k < 1) throw InputError("min_degree_long_path: k must be >= 1");
  const int n = g.order();
  const int need_degree = n / (k + 1);
  if (g.min_degree() < need_degree)
    throw InputError("min_degree_long_path: minimum degree " + std::to_string(g.min_degree()) +
                     " below floor(n/(k+1)) = " + std::to_string(need_degree));
  const int target = (n + k - 1) / k;
  VertexList p = path_of_at_least(g, target);
  if (static_cast<int>(p.size()) < target)
    throw InvariantError("long-path lemma violated: no path on " + std::to_string(target) +
                         " vertices" + instance_tag(g));
  return p;
}

VertexList erdos_gallai_path(const Graph& g) {
  const int n = g.order();
  const int delta = g.min_degree();
  if (n == 0 || !is_connected(g)) throw InputError("erdos_gallai_path: graph must be connected");
  if (n < 2 * delta + 1)
    throw InputError("erdos_gallai_path: need n >= 2*delta+1, have n=" + std::to_string(n) +
                     " delta=" + std::to_string(delta));
  const int target = 2 * delta + 1;
  VertexList p = path_of_at_least(g, target);
  if (static_cast<int>(p.size()) < target)
    throw InvariantError("Erdos-Gallai path bound violated: no path on " +
                         std::to_string(target) + " vertices" + instance_tag(g));
  return p;
}

PathFreePartition path_free_partition(const Graph& g, int d) {
  if (d < 1) throw InputError("path_free_partition: d must be >= 1");
  const int half = d / 2;
  if (g.min_degree() < half)
    throw InputError("path_free_partition: minimum degree " + std::to_string(g.min_degree()) +
                     " below floor(d/2) = " + std::to_string(half));
  if (has_path(g, d))
    throw InputError("path_free_partition: graph contains a path on " + std::to_string(d) +
                     " vertices");

  PathFreePartition out;
  for (const VertexSet& comp : connected_components(g)) {
    const int size = comp.size();
    if (size < half + 1 || size > d - 1)
      throw InvariantError("path-free partition: component of size " + std::to_string(size) +
                           " outside [" + std::to_string(half + 1) + ", " +
                           std::to_string(d - 1) + "]" + instance_tag(g));
    VertexList cycle;
    if (size <= 2) {
      cycle = comp.members();
    } else {
      InducedSubgraph sub = induced(g, comp);
      auto local = hamiltonian_cycle(sub.graph);
      if (!local)
        throw InvariantError("path-free partition: component without Hamiltonian cycle" +
                             instance_tag(g));
      for (int v : *local) cycle.push_back(sub.original[v]);
    }
    out.parts.push_back(comp);
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace rgl
