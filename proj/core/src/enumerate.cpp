#include "rgl/enumerate.hpp"

#include <string>
#include <vector>

#include "rgl/errors.hpp"

namespace rgl {
namespace {

struct Enumerator {
  const EnumerationFilter& filter;
  const std::function<bool(const Graph&)>& f;
  std::vector<Edge> edges;
  std::vector<int> undecided;  // per vertex, incident edges not yet decided
  Graph g;
  long long visited = 0;

  bool degree_feasible(int v) const { return g.degree(v) + undecided[v] >= filter.min_degree; }

  // Returns false once f asked to stop.
  bool run(std::size_t i) {
    if (i == edges.size()) {
      if (filter.connected && !is_connected(g)) return true;
      ++visited;
      return f(g);
    }
    const Edge e = edges[i];
    --undecided[e.u];
    --undecided[e.v];
    bool keep_going = true;
    if (degree_feasible(e.u) && degree_feasible(e.v)) keep_going = run(i + 1);
    if (keep_going) {
      g.add_edge(e.u, e.v);
      if (filter.forbidden_path <= 0 || !has_path(g, filter.forbidden_path)) keep_going = run(i + 1);
      g.remove_edge(e.u, e.v);
    }
    ++undecided[e.u];
    ++undecided[e.v];
    return keep_going;
  }
};

}  // namespace

long long for_each_graph(int n, const EnumerationFilter& filter,
                         const std::function<bool(const Graph&)>& f) {
  if (n < 0) throw InputError("for_each_graph: negative order");
  if (n > kMaxEnumerationOrder)
    throw CapacityError("for_each_graph: order " + std::to_string(n) + " beyond exhaustive bound " +
                        std::to_string(kMaxEnumerationOrder));
  Enumerator en{filter, f, {}, std::vector<int>(n, n - 1), Graph(n)};
  en.edges = complement(Graph(n)).edges();
  if (n > 0 && filter.min_degree > n - 1) return 0;
  if (filter.forbidden_path > 0 && has_path(en.g, filter.forbidden_path)) return 0;
  en.run(0);
  return en.visited;
}

}  // namespace rgl
