#include <algorithm>

#include "rgl/errors.hpp"
#include "rgl/graph.hpp"

namespace rgl {
namespace {

// Greedy colouring of the candidate set; the number of colour classes
// bounds the clique number of g[cand] from above.
int colour_bound(const Graph& g, Mask cand) {
  int colours = 0;
  while (cand) {
    ++colours;
    Mask avail = cand;
    while (avail) {
      int v = lowest(avail);
      cand &= ~bit(v);
      avail &= ~bit(v) & ~g.neighbors(v);
    }
  }
  return colours;
}

// Depth-first in ascending vertex order: the first completed set is the
// lexicographically least clique of the requested size.
bool extend_clique(const Graph& g, Mask chosen, Mask cand, int need, Mask& out) {
  if (need == 0) {
    out = chosen;
    return true;
  }
  if (popcount(cand) < need) return false;
  if (need > 2 && colour_bound(g, cand) < need) return false;
  while (cand) {
    if (popcount(cand) < need) return false;
    int v = lowest(cand);
    cand &= ~bit(v);
    if (extend_clique(g, chosen | bit(v), cand & g.neighbors(v), need - 1, out)) return true;
  }
  return false;
}

void max_clique(const Graph& g, Mask cand, int depth, int& best) {
  while (cand) {
    if (depth + colour_bound(g, cand) <= best) return;
    int v = lowest(cand);
    cand &= ~bit(v);
    Mask next = cand & g.neighbors(v);
    if (!next) {
      best = std::max(best, depth + 1);
    } else {
      max_clique(g, next, depth + 1, best);
    }
  }
}

bool visit_cliques(const Graph& g, Mask chosen, Mask cand, int need, long long limit,
                   long long& seen, const std::function<bool(VertexSet)>& f) {
  if (need == 0) {
    ++seen;
    return f(VertexSet(chosen)) && seen < limit;
  }
  while (cand && popcount(cand) >= need) {
    int v = lowest(cand);
    cand &= ~bit(v);
    if (!visit_cliques(g, chosen | bit(v), cand & g.neighbors(v), need - 1, limit, seen, f))
      return false;
  }
  return true;
}

}  // namespace

bool has_clique_within(const Graph& g, Mask candidates, int size) {
  if (size <= 0) return true;
  Mask out = 0;
  return extend_clique(g, 0, candidates & g.vertices(), size, out);
}

std::optional<VertexSet> find_clique(const Graph& g, int size) {
  if (size < 0) throw InputError("find_clique: negative size");
  Mask out = 0;
  if (!extend_clique(g, 0, g.vertices(), size, out)) return std::nullopt;
  return VertexSet(out);
}

std::optional<VertexSet> find_independent_set(const Graph& g, int size) {
  return find_clique(complement(g), size);
}

long long for_each_independent_set(const Graph& g, int size, long long limit,
                                   const std::function<bool(VertexSet)>& f) {
  if (size < 0) throw InputError("for_each_independent_set: negative size");
  if (limit <= 0) return 0;
  long long seen = 0;
  visit_cliques(complement(g), 0, g.vertices(), size, limit, seen, f);
  return seen;
}

int clique_number(const Graph& g) {
  int best = 0;
  max_clique(g, g.vertices(), 0, best);
  return best;
}

int independence_number(const Graph& g) { return clique_number(complement(g)); }

}  // namespace rgl
