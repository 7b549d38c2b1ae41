#include "rgl/constructions.hpp"

#include <string>

#include "json.hpp"
#include "rgl/errors.hpp"
#include "rgl/graph_io.hpp"

namespace rgl {

Graph turan_graph(int n, int parts) {
  if (parts < 1) throw InputError("turan_graph: need at least one part");
  if (n < 0) throw InputError("turan_graph: negative order");
  Graph g(n);
  std::vector<int> part_of;
  for (int p = 0; p < parts; ++p) {
    const int size = n / parts + (p < n % parts ? 1 : 0);
    for (int i = 0; i < size; ++i) part_of.push_back(p);
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

namespace {

TwoColoring placeholder() { return TwoColoring(Graph(0), Graph(0)); }

}  // namespace

ExtremalConstruction build_extremal(int r, int t, int k) {
  if (r < 2 || t < 2 || k < 1) throw InputError("build_extremal: need r >= 2, t >= 2, k >= 1");
  const std::int64_t n64 = window(r, t, k).upper;
  if (n64 > kMaxVertices)
    throw CapacityError("build_extremal: n = " + std::to_string(n64) + " exceeds 64 vertices");
  const int n = static_cast<int>(n64);
  const int part_size = (t - 1) * (k + 1);

  ExtremalConstruction e{GoodnessParams::make(r, t, k, n), turan_graph(n, r - 1), placeholder(), {}, {}};
  Graph blue(n);
  for (int p = 0; p < r - 1; ++p) {
    VertexSet part;
    for (int q = 0; q <= k; ++q) {
      VertexSet clique;
      const int base = p * part_size + q * (t - 1);
      for (int i = 0; i < t - 1; ++i) {
        clique.insert(base + i);
        part.insert(base + i);
        for (int j = i + 1; j < t - 1; ++j) blue.add_edge(base + i, base + j);
      }
      e.cliques.push_back(clique);
    }
    e.parts.push_back(part);
  }
  e.graph = graph_union(e.graph, blue);
  e.coloring = TwoColoring(e.graph, blue);
  return e;
}

bool ValidationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

const CheckEntry* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

ValidationReport validate_extremal(const ExtremalConstruction& e) {
  ValidationReport rep;
  const GoodnessParams& p = e.params;
  const int r = static_cast<int>(p.r), t = static_cast<int>(p.t);

  auto clique = find_clique(e.coloring.red(), r);
  rep.checks.push_back({"red_kr_free", !clique.has_value(),
                        clique ? "red K_r found" : "no red K_" + std::to_string(r)});

  auto path = find_path(e.coloring.blue(), t);
  rep.checks.push_back({"blue_pt_free", !path.has_value(),
                        path ? "blue P_t found" : "no blue P_" + std::to_string(t)});

  const std::int64_t threshold = degree_threshold(p);
  const int delta = e.graph.min_degree();
  rep.checks.push_back({"min_degree", delta == threshold - 1,
                        "delta=" + std::to_string(delta) + " threshold=" + std::to_string(threshold)});

  const std::int64_t target = extremal_degree(p);
  bool regular = true;
  for (int v = 0; v < e.graph.order(); ++v) regular = regular && e.graph.degree(v) == target;
  rep.checks.push_back({"degree_profile", regular,
                        "every degree " + std::string(regular ? "equals " : "should equal ") +
                            std::to_string(target)});

  bool layout = static_cast<int>(e.parts.size()) == r - 1 &&
                static_cast<std::int64_t>(e.cliques.size()) == (r - 1) * (p.k + 1) &&
                e.graph.order() == p.n;
  Mask covered = 0;
  for (const VertexSet& part : e.parts) {
    layout = layout && part.size() == (t - 1) * (p.k + 1) && !(covered & part.bits());
    covered |= part.bits();
  }
  layout = layout && covered == e.graph.vertices();
  for (const VertexSet& c : e.cliques) {
    layout = layout && c.size() == t - 1;
    for (int u : c.members())
      for (int v : c.members())
        if (u < v) layout = layout && e.coloring.blue().adjacent(u, v);
  }
  rep.checks.push_back({"layout", layout, layout ? "parts and cliques as built" : "layout mismatch"});
  return rep;
}

std::string sidecar_json(const ExtremalConstruction& e) {
  nlohmann::ordered_json j;
  j["r"] = e.params.r;
  j["t"] = e.params.t;
  j["k"] = e.params.k;
  j["n"] = e.params.n;
  j["graph6"] = to_graph6(e.graph);
  auto sets = [](const std::vector<VertexSet>& vs) {
    auto arr = nlohmann::ordered_json::array();
    for (const VertexSet& s : vs) arr.push_back(s.members());
    return arr;
  };
  j["parts"] = sets(e.parts);
  j["cliques"] = sets(e.cliques);
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& ed : e.coloring.blue().edges()) edges.push_back({ed.u, ed.v});
  j["blue_edges"] = edges;
  return j.dump(2);
}

}  // namespace rgl
