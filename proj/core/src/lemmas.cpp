#include "rgl/lemmas.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "json.hpp"
#include "rgl/check.hpp"
#include "rgl/enumerate.hpp"
#include "rgl/errors.hpp"
#include "rgl/families.hpp"
#include "rgl/graph_io.hpp"
#include "rgl/sampling.hpp"
#include "rgl/thresholds.hpp"

namespace rgl::lemmas {

std::string LemmaReport::to_json() const {
  nlohmann::ordered_json j;
  j["lemma"] = lemma;
  j["parameters"] = parameters;
  j["exhaustive_scope"] = exhaustive_scope;
  j["exhaustive_graphs"] = exhaustive_graphs;
  j["random_graphs"] = random_graphs;
  j["counterexamples"] = counterexamples;
  j["pass"] = pass();
  return j.dump();
}

namespace {

constexpr std::size_t kMaxRecorded = 20;

void record(LemmaReport& rep, const Graph& g) {
  if (rep.counterexamples.size() < kMaxRecorded) rep.counterexamples.push_back(to_graph6(g));
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

Graph shuffle_labels(const Graph& g, sampling::Rng& rng) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Graph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

bool long_path_ok(const Graph& g, int k) {
  const int want = static_cast<int>(ceil_div(g.order(), k));
  try {
    VertexList p = min_degree_long_path(g, k);
    return check::is_path(g, p) && static_cast<int>(p.size()) >= want;
  } catch (const InvariantError&) {
    return false;
  }
}

bool erdos_gallai_ok(const Graph& g) {
  try {
    VertexList p = erdos_gallai_path(g);
    return check::is_path(g, p) && static_cast<int>(p.size()) >= 2 * g.min_degree() + 1;
  } catch (const InvariantError&) {
    return false;
  }
}

bool partition_ok(const Graph& g, int d) {
  PathFreePartition part;
  try {
    part = path_free_partition(g, d);
  } catch (const InvariantError&) {
    return false;
  }
  Mask seen = 0;
  if (part.parts.size() != part.cycles.size()) return false;
  for (std::size_t i = 0; i < part.parts.size(); ++i) {
    const VertexSet& s = part.parts[i];
    if (s.bits() & seen) return false;
    seen |= s.bits();
    if (s.size() < d / 2 + 1 || s.size() > d - 1) return false;
    const VertexList& cyc = part.cycles[i];
    if (static_cast<int>(cyc.size()) != s.size()) return false;
    if (VertexSet::from_list(cyc) != s) return false;
    const bool hamiltonian = s.size() <= 2 ? check::is_path(g, cyc) : check::is_cycle(g, cyc);
    if (!hamiltonian) return false;
  }
  return seen == g.vertices();
}

bool brooks_ok(const Graph& g) {
  const ProperColoring col = brooks_coloring(g);
  if (!check::is_proper_coloring(g, col)) return false;
  const int delta = g.max_degree();
  const BrooksClass cls = classify_brooks(g);
  const int chi = chromatic_number(g).chi;
  if (clique_number(g) > chi || chi > col.colors) return false;
  if (cls == BrooksClass::Neither) return col.colors <= delta && chi <= delta;
  return chi == delta + 1;
}

}  // namespace

LemmaReport path_length(int max_n, const std::vector<int>& ks, long long trials, std::uint64_t seed,
                        int random_max_n) {
  LemmaReport rep;
  rep.lemma = "path-length";
  rep.parameters = "n<=" + std::to_string(max_n) + " k=" + join(ks);
  rep.exhaustive_scope = "graphs with delta >= floor(n/(k+1)) and no path on ceil(n/k) vertices";
  for (int k : ks) {
    if (k < 1) throw InputError("path-length: k must be positive");
    for (int n = 1; n <= max_n; ++n) {
      // Any graph visited is a counterexample: degree bound met, no long path.
      EnumerationFilter f;
      f.min_degree = n / (k + 1);
      f.forbidden_path = static_cast<int>(ceil_div(n, k));
      rep.exhaustive_graphs += for_each_graph(n, f, [&](const Graph& g) {
        record(rep, g);
        return true;
      });
    }
  }
  if (ks.empty() || random_max_n < 1) return rep;
  for (long long i = 0; i < trials; ++i) {
    auto rng = sampling::instance_rng(seed, static_cast<std::uint64_t>(i));
    const int k = ks[static_cast<std::size_t>(i) % ks.size()];
    const int n = std::uniform_int_distribution<int>(1, random_max_n)(rng);
    const Graph g = sampling::threshold_graph(n, n / (k + 1), rng, static_cast<std::uint64_t>(i));
    ++rep.random_graphs;
    if (!long_path_ok(g, k)) record(rep, g);
  }
  return rep;
}

LemmaReport erdos_gallai(int max_n, long long trials, std::uint64_t seed, int random_max_n) {
  LemmaReport rep;
  rep.lemma = "erdos-gallai";
  rep.parameters = "n<=" + std::to_string(max_n);
  rep.exhaustive_scope = "connected graphs with delta >= d, n >= 2d+1 and no path on 2d+1 vertices";
  for (int n = 3; n <= max_n; ++n) {
    for (int d = 1; 2 * d + 1 <= n; ++d) {
      EnumerationFilter f;
      f.min_degree = d;
      f.forbidden_path = 2 * d + 1;
      f.connected = true;
      rep.exhaustive_graphs += for_each_graph(n, f, [&](const Graph& g) {
        record(rep, g);
        return true;
      });
    }
  }
  for (long long i = 0; i < trials && random_max_n >= 3; ++i) {
    auto rng = sampling::instance_rng(seed, static_cast<std::uint64_t>(i));
    const int n = std::uniform_int_distribution<int>(3, random_max_n)(rng);
    const double p = std::uniform_real_distribution<double>(0.0, 0.5)(rng);
    const Graph g = sampling::connected(n, p, rng);
    if (n < 2 * g.min_degree() + 1) continue;
    ++rep.random_graphs;
    if (!erdos_gallai_ok(g)) record(rep, g);
  }
  return rep;
}

LemmaReport partition(int max_n, const std::vector<int>& ds, long long trials, std::uint64_t seed) {
  LemmaReport rep;
  rep.lemma = "partition";
  rep.parameters = "n<=" + std::to_string(max_n) + " d=" + join(ds);
  rep.exhaustive_scope = "all P_d-free graphs with delta >= floor(d/2)";
  for (int d : ds) {
    if (d < 2) throw InputError("partition: d must be at least 2");
    for (int n = 1; n <= max_n; ++n) {
      EnumerationFilter f;
      f.min_degree = d / 2;
      f.forbidden_path = d;
      rep.exhaustive_graphs += for_each_graph(n, f, [&](const Graph& g) {
        if (!partition_ok(g, d)) record(rep, g);
        return true;
      });
    }
  }
  if (ds.empty()) return rep;
  // Random: disjoint unions of dense blocks of admissible orders.
  for (long long i = 0; i < trials; ++i) {
    auto rng = sampling::instance_rng(seed, static_cast<std::uint64_t>(i));
    const int d = ds[static_cast<std::size_t>(i) % ds.size()];
    if (d < 3) continue;
    std::uniform_int_distribution<int> size_of(d / 2 + 1, d - 1);
    const int blocks = std::uniform_int_distribution<int>(1, 4)(rng);
    Graph g(0);
    for (int b = 0; b < blocks && g.order() + d - 1 <= kMaxVertices; ++b)
      g = families::disjoint_union(g, sampling::connected(size_of(rng), 0.7, rng));
    if (g.min_degree() < d / 2 || has_path(g, d)) continue;
    ++rep.random_graphs;
    const Graph h = shuffle_labels(g, rng);
    if (!partition_ok(h, d)) record(rep, h);
  }
  return rep;
}

LemmaReport brooks(long long trials, std::uint64_t seed, int max_n) {
  LemmaReport rep;
  rep.lemma = "brooks";
  rep.parameters = "n<=" + std::to_string(max_n);
  rep.exhaustive_scope = "none";
  for (long long i = 0; i < trials; ++i) {
    auto rng = sampling::instance_rng(seed, static_cast<std::uint64_t>(i));
    const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
    Graph g(0);
    if (i % 4 == 3 && n >= 4) {
      const int d = std::uniform_int_distribution<int>(2, n - 1)(rng);
      auto reg = sampling::regular(n, d, rng);
      g = reg && is_connected(*reg) ? *reg : sampling::connected(n, 0.5, rng);
    } else {
      const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      g = sampling::connected(n, p, rng);
    }
    ++rep.random_graphs;
    bool ok = false;
    try {
      ok = brooks_ok(g);
    } catch (const InvariantError&) {
      ok = false;
    }
    if (!ok) record(rep, g);
  }
  return rep;
}

}  // namespace rgl::lemmas
