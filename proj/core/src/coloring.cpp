#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "rgl/errors.hpp"
#include "rgl/graph.hpp"

namespace rgl {

std::vector<VertexSet> ProperColoring::classes() const {
  std::vector<VertexSet> out(static_cast<std::size_t>(colors));
  for (std::size_t v = 0; v < color_of.size(); ++v) out[color_of[v]].insert(static_cast<int>(v));
  return out;
}

ProperColoring canonical(ProperColoring c) {
  std::vector<int> relabel(c.color_of.size() + static_cast<std::size_t>(c.colors) + 1, -1);
  int next = 0;
  for (int& col : c.color_of) {
    if (col >= static_cast<int>(relabel.size())) relabel.resize(col + 1, -1);
    if (relabel[col] < 0) relabel[col] = next++;
    col = relabel[col];
  }
  c.colors = next;
  return c;
}

namespace {

// DSATUR backtracking: decides k-colourability, colour symmetry broken by
// never opening more than one new colour per step.
class Colorer {
 public:
  Colorer(const Graph& g, int k) : g_(g), k_(k), color_(g.order(), -1), classes_(k, 0) {}

  bool solve() { return step(0, 0); }
  ProperColoring result() const { return canonical({color_, k_}); }

  // Single greedy DSATUR pass; returns colours used.
  int greedy() {
    for (int colored = 0; colored < g_.order(); ++colored) {
      int v = pick();
      Mask nb = g_.neighbors(v);
      int c = 0;
      while (c < static_cast<int>(classes_.size()) && (classes_[c] & nb)) ++c;
      if (c == static_cast<int>(classes_.size())) classes_.push_back(0);
      assign(v, c);
    }
    return static_cast<int>(classes_.size());
  }

  std::vector<int> colors() const { return color_; }

 private:
  int saturation(int v) const {
    int s = 0;
    Mask nb = g_.neighbors(v);
    for (Mask cls : classes_) s += (cls & nb) ? 1 : 0;
    return s;
  }

  int pick() const {
    Mask uncolored = 0;
    for (int v = 0; v < g_.order(); ++v) {
      if (color_[v] < 0) uncolored |= bit(v);
    }
    int best = -1, best_sat = -1, best_deg = -1;
    for_each_bit(uncolored, [&](int v) {
      int s = saturation(v);
      int d = popcount(g_.neighbors(v) & uncolored);
      if (s > best_sat || (s == best_sat && d > best_deg)) {
        best = v;
        best_sat = s;
        best_deg = d;
      }
    });
    return best;
  }

  void assign(int v, int c) {
    color_[v] = c;
    classes_[c] |= bit(v);
  }
  void unassign(int v, int c) {
    color_[v] = -1;
    classes_[c] &= ~bit(v);
  }

  bool step(int colored, int used) {
    if (colored == g_.order()) return true;
    int v = pick();
    Mask nb = g_.neighbors(v);
    int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      if (classes_[c] & nb) continue;
      assign(v, c);
      if (step(colored + 1, std::max(used, c + 1))) return true;
      unassign(v, c);
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> color_;
  std::vector<Mask> classes_;
};

struct SurplusSearch {
  const Graph& g;
  int chi;
  std::vector<Mask> classes;
  int best = std::numeric_limits<int>::max();

  void run(int v, int used) {
    const int n = g.order();
    if (best == 1) return;
    if (chi - used > n - v) return;
    if (v == n) {
      int smallest = n;
      for (Mask cls : classes) smallest = std::min(smallest, popcount(cls));
      best = std::min(best, smallest);
      return;
    }
    int limit = std::min(used + 1, chi);
    for (int c = 0; c < limit; ++c) {
      if (classes[c] & g.neighbors(v)) continue;
      classes[c] |= bit(v);
      run(v + 1, std::max(used, c + 1));
      classes[c] &= ~bit(v);
    }
  }
};

VertexList bfs_order(const Graph& g, int root, Mask within) {
  VertexList order{root};
  Mask seen = bit(root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    Mask next = g.neighbors(order[i]) & within & ~seen;
    seen |= next;
    for_each_bit(next, [&](int w) { order.push_back(w); });
  }
  return order;
}

// Colours `order` greedily on top of whatever `color_of` already holds.
void greedy_in_order(const Graph& g, const VertexList& order, std::vector<int>& color_of) {
  for (int v : order) {
    std::vector<bool> taken(static_cast<std::size_t>(g.order()) + 1, false);
    for_each_bit(g.neighbors(v), [&](int w) {
      if (color_of[w] >= 0) taken[color_of[w]] = true;
    });
    int c = 0;
    while (taken[c]) ++c;
    color_of[v] = c;
  }
}

VertexList reverse_bfs(const Graph& g, int root, Mask within) {
  VertexList order = bfs_order(g, root, within);
  std::reverse(order.begin(), order.end());
  return order;
}

bool connected_within(const Graph& g, Mask within) {
  if (!within) return true;
  return reachable(g, lowest(within), within) == within;
}

ProperColoring finish(std::vector<int> color_of) {
  int colors = 0;
  for (int c : color_of) colors = std::max(colors, c + 1);
  return canonical({std::move(color_of), colors});
}

}  // namespace

ChromaticResult chromatic_number(const Graph& g) {
  if (g.order() == 0) return {0, {}};
  Colorer greedy(g, 0);
  int upper = greedy.greedy();
  ProperColoring best = finish(greedy.colors());
  for (int k = std::max(1, clique_number(g)); k < upper; ++k) {
    Colorer exact(g, k);
    if (exact.solve()) return {k, exact.result()};
  }
  return {upper, best};
}

int chromatic_surplus(const Graph& g, int bound) {
  if (g.order() == 0) throw InputError("chromatic_surplus: graph has no vertices");
  if (g.order() > bound)
    throw CapacityError("chromatic_surplus: " + std::to_string(g.order()) +
                        " vertices exceeds the enumeration bound " + std::to_string(bound));
  const int chi = chromatic_number(g).chi;
  SurplusSearch search{g, chi, std::vector<Mask>(chi, 0)};
  search.run(0, 0);
  return search.best;
}

BrooksClass classify_brooks(const Graph& g) {
  const int n = g.order();
  if (n >= 1 && g.min_degree() == n - 1) return BrooksClass::Complete;
  if (n >= 3 && n % 2 == 1 && g.min_degree() == 2 && g.max_degree() == 2 && is_connected(g))
    return BrooksClass::OddCycle;
  return BrooksClass::Neither;
}

const char* to_string(BrooksClass c) {
  switch (c) {
    case BrooksClass::Complete:
      return "complete";
    case BrooksClass::OddCycle:
      return "odd_cycle";
    case BrooksClass::Neither:
      return "neither";
  }
  return "neither";
}

ProperColoring brooks_coloring(const Graph& g) {
  const int n = g.order();
  if (n == 0) return {};
  if (!is_connected(g)) throw InputError("brooks_coloring: graph must be connected");

  std::vector<int> color_of(n, -1);
  const BrooksClass cls = classify_brooks(g);
  if (cls == BrooksClass::Complete) {
    for (int v = 0; v < n; ++v) color_of[v] = v;
    return {color_of, n};
  }
  const Mask all = g.vertices();
  const int delta = g.max_degree();
  if (cls == BrooksClass::OddCycle || delta <= 2) {
    // Paths and cycles: walk from 0 alternating; an odd cycle needs a third
    // colour on the last vertex.
    greedy_in_order(g, bfs_order(g, 0, all), color_of);
    return finish(color_of);
  }

  for (int v = 0; v < n; ++v) {
    if (g.degree(v) < delta) {
      greedy_in_order(g, reverse_bfs(g, v, all), color_of);
      return finish(color_of);
    }
  }

  // Regular from here on.
  for (int c = 0; c < n; ++c) {
    Mask rest = all & ~bit(c);
    if (connected_within(g, rest)) continue;
    // Cut vertex: colour each block-side with c last, then align c to 0.
    Mask left = rest;
    std::vector<int> merged(n, -1);
    while (left) {
      Mask side = reachable(g, lowest(left), left);
      left &= ~side;
      std::vector<int> local(n, -1);
      greedy_in_order(g, reverse_bfs(g, c, side | bit(c)), local);
      const int cc = local[c];
      for_each_bit(side, [&](int w) {
        int col = local[w];
        if (col == cc) col = 0;
        else if (col == 0) col = cc;
        merged[w] = col;
      });
    }
    merged[c] = 0;
    return finish(merged);
  }

  // 2-connected, regular, not complete: v with non-adjacent neighbours a, b
  // such that G - {a, b} stays connected.
  for (int v = 0; v < n; ++v) {
    VertexList nb = VertexSet(g.neighbors(v)).members();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const int a = nb[i], b = nb[j];
        if (g.adjacent(a, b)) continue;
        Mask rest = all & ~bit(a) & ~bit(b);
        if (!connected_within(g, rest)) continue;
        color_of[a] = 0;
        color_of[b] = 0;
        greedy_in_order(g, reverse_bfs(g, v, rest), color_of);
        return finish(color_of);
      }
    }
  }
  throw InvariantError("brooks_coloring: no admissible start triple in a 2-connected regular graph");
}

}  // namespace rgl
