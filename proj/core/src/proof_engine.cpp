#include "rgl/proof_engine.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>
#include <tuple>

#include "json.hpp"
#include "rgl/constructions.hpp"
#include "rgl/enumerate.hpp"
#include "rgl/graph_io.hpp"
#include "rgl/sampling.hpp"

namespace rgl {

const char* to_string(ProofStep s) {
  switch (s) {
    case ProofStep::Base:
      return "base";
    case ProofStep::CaseOne:
      return "case1";
    case ProofStep::CaseTwo:
      return "case2";
  }
  return "base";
}

const char* to_string(Route r) {
  switch (r) {
    case Route::BaseRedEdge:
      return "base_red_edge";
    case Route::BaseBluePath:
      return "base_blue_path";
    case Route::IndependentSetPath:
      return "independent_set_path";
    case Route::FallbackRedClique:
      return "fallback_red_clique";
    case Route::FallbackBluePath:
      return "fallback_blue_path";
  }
  return "base_red_edge";
}

namespace {

std::string instance_json(const TwoColoring& c, int r, int t) {
  nlohmann::ordered_json j;
  j["r"] = r;
  j["t"] = t;
  j["graph6"] = to_graph6(c.host());
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : c.blue().edges()) edges.push_back({e.u, e.v});
  j["blue_edges"] = edges;
  return j.dump();
}

std::string level_tag(int clique_target, const GoodnessParams& p) {
  return " (r'=" + std::to_string(clique_target) + ", n=" + std::to_string(p.n) + ", x=" + std::to_string(p.x) +
         ", k=" + std::to_string(p.k) + ")";
}

VertexList relabel(const VertexList& local, const VertexList& labels) {
  VertexList out;
  out.reserve(local.size());
  for (int v : local) out.push_back(labels[v]);
  return out;
}

Witness red_clique_with_seed(const VertexList& seed, const VertexList& local_clique, const VertexList& labels) {
  VertexList vs = seed;
  for (int v : local_clique) vs.push_back(labels[v]);
  std::sort(vs.begin(), vs.end());
  return {WitnessKind::RedClique, vs};
}

}  // namespace

Extraction extract_witness(const Graph& g, const TwoColoring& c, int r, int t, const ExtractOptions& options) {
  if (r < 2 || t < 2) throw InputError("extract_witness: need r >= 2 and t >= 2");
  if (!(c.host() == g)) throw InputError("extract_witness: colouring is not of this graph");
  const GoodnessParams top = GoodnessParams::for_order(r, t, g.order());
  if (top.k < std::max<std::int64_t>(1, t - 3))
    throw InputError("extract_witness: k=" + std::to_string(top.k) + " outside the proven regime k >= t-3 = " +
                     std::to_string(t - 3));
  const std::int64_t top_threshold = degree_threshold(top);
  if (g.min_degree() < top_threshold)
    throw InputError("extract_witness: minimum degree " + std::to_string(g.min_degree()) + " below threshold " +
                     std::to_string(top_threshold) + level_tag(r, top));

  Extraction ex;
  Graph host = g;
  Graph blue = c.blue();
  VertexList labels(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) labels[v] = v;
  VertexList seed;
  int target = r;
  GoodnessParams params = top;

  for (;;) {
    InductionFrame frame;
    frame.clique_target = target;
    frame.params = params;
    frame.threshold = degree_threshold(params);
    frame.min_degree = host.min_degree();
    frame.seed = seed;
    if (frame.min_degree < frame.threshold)
      throw InvariantError("degree transfer failed: delta=" + std::to_string(frame.min_degree) + " < " +
                           std::to_string(frame.threshold) + level_tag(target, params));
    const Graph red = graph_difference(host, blue);
    const int n = host.order();

    if (target == 2) {
      frame.step = ProofStep::Base;
      ex.frames.push_back(frame);
      const auto red_edges = red.edges();
      if (!red_edges.empty()) {
        ex.witness = red_clique_with_seed(seed, {red_edges.front().u, red_edges.front().v}, labels);
        ex.route = Route::BaseRedEdge;
      } else {
        const VertexList long_path = min_degree_long_path(host, static_cast<int>(params.k));
        if (static_cast<int>(long_path.size()) < t)
          throw InvariantError("base case: long path shorter than t" + level_tag(target, params));
        const auto path = find_path(host, t);
        if (!path) throw InvariantError("base case: no P_t despite a longer path" + level_tag(target, params));
        ex.witness = {WitnessKind::BluePath, relabel(*path, labels)};
        ex.route = Route::BaseBluePath;
      }
      break;
    }

    int pivot = -1;
    for (int v = 0; v < n && pivot < 0; ++v)
      if (red.degree(v) >= n - params.x + 1) pivot = v;

    if (pivot >= 0) {
      frame.step = ProofStep::CaseOne;
      frame.pivot = labels[pivot];
      const int big_n = red.degree(pivot);
      frame.pivot_red_degree = big_n;
      frame.j = (target - 1) * params.x - n;
      frame.x_next = ceil_div(big_n, target - 2);
      GoodnessParams next;
      try {
        next = GoodnessParams::for_order(target - 1, t, big_n);
      } catch (const InputError& e) {
        throw InvariantError(std::string("case 1: red neighbourhood outside every window: ") + e.what());
      }
      frame.k_next = next.k;
      frame.threshold_next = degree_threshold(next);
      const InducedSubgraph sub = induced(host, VertexSet(red.neighbors(pivot)));
      frame.min_degree_next = sub.graph.min_degree();
      ex.frames.push_back(frame);

      if (frame.x_next < params.x || next.k < params.k)
        throw InvariantError("case 1: parameter transfer x' >= x, k' >= k failed" + level_tag(target, params));
      if (frame.min_degree_next < big_n - ceil_div(params.k * params.x, params.k + 1) ||
          frame.min_degree_next < frame.threshold_next)
        throw InvariantError("case 1: induced minimum degree below the transferred threshold" +
                             level_tag(target, params));

      seed.push_back(labels[pivot]);
      labels = relabel(sub.original, labels);
      blue = induced(blue, VertexSet(red.neighbors(pivot))).graph;
      host = sub.graph;
      params = next;
      --target;
      ++ex.depth;
      continue;
    }

    frame.step = ProofStep::CaseTwo;
    ex.frames.push_back(frame);
    if (blue.min_degree() < params.M)
      throw InvariantError("case 2: blue minimum degree below M" + level_tag(target, params));
    if (params.M < t - 2) throw InvariantError("case 2: M < t-2 inside the proven regime" + level_tag(target, params));

    // A red-independent set of size x carries a blue path on t vertices.
    std::optional<VertexList> found;
    std::string broken_claim;
    ex.independent_sets_tried += for_each_independent_set(
        red, static_cast<int>(params.x), options.independent_set_cap, [&](VertexSet w) {
          const InducedSubgraph bw = induced(blue, w);
          if (auto p = find_path(bw.graph, t)) {
            found = relabel(relabel(*p, bw.original), labels);
            return false;
          }
          broken_claim = to_graph6(bw.graph);
          return false;
        });
    if (found) {
      ex.witness = {WitnessKind::BluePath, *found};
      ex.route = Route::IndependentSetPath;
      break;
    }
    if (!broken_claim.empty())
      throw InvariantError("case 2: red-independent set of size x without a blue P_t (blue part " + broken_claim +
                           ")" + level_tag(target, params));

    if (auto clique = find_clique(red, target)) {
      ex.witness = red_clique_with_seed(seed, clique->members(), labels);
      ex.route = Route::FallbackRedClique;
      ex.checkpoint = "red_kr_free";
    } else if (auto p = find_path(blue, t)) {
      ex.witness = {WitnessKind::BluePath, relabel(*p, labels)};
      ex.route = Route::FallbackBluePath;
      ex.checkpoint = "blue_pt_free";
    } else {
      throw TheoremFalsified("theorem falsified: good colouring above the degree threshold",
                             instance_json(c, r, t));
    }
    break;
  }

  if (!verify_witness(c, ex.witness, r, t))
    throw InvariantError("extract_witness produced a witness that fails verification: " + instance_json(c, r, t));
  return ex;
}

std::optional<std::string> Case2Report::first_broken() const {
  for (const ChainLink& l : links)
    if (!l.holds) return l.name;
  return std::nullopt;
}

bool Case2Report::chain_closed() const { return !first_broken().has_value(); }

std::string Case2Report::to_json() const {
  nlohmann::ordered_json j;
  j["r"] = params.r;
  j["t"] = params.t;
  j["k"] = params.k;
  j["n"] = params.n;
  j["x"] = params.x;
  j["M"] = params.M;
  j["delta_G"] = delta_g;
  j["threshold"] = threshold;
  j["delta_B"] = delta_blue;
  j["max_B"] = max_blue;
  j["max_missing"] = max_missing;
  j["max_H"] = max_h;
  j["alpha_R"] = alpha_red;
  j["omega_R"] = omega_red;
  j["chi_H"] = chi_h;
  j["chi_lower"] = chi_lower;
  j["blue_has_path"] = blue_has_path;
  auto parts = nlohmann::ordered_json::array();
  for (const VertexSet& s : partition) parts.push_back(s.members());
  j["partition"] = parts;
  j["component"] = component.members();
  j["component_class"] = to_string(component_class);
  j["branch"] = branch;
  auto arr = nlohmann::ordered_json::array();
  for (const ChainLink& l : links) arr.push_back({{"name", l.name}, {"holds", l.holds}, {"detail", l.detail}});
  j["links"] = arr;
  auto fb = first_broken();
  j["first_broken"] = fb ? nlohmann::ordered_json(*fb) : nlohmann::ordered_json(nullptr);
  j["chain_closed"] = chain_closed();
  return j.dump();
}

Case2Report case2_diagnostics(const Graph& g, const TwoColoring& c, const GoodnessParams& p) {
  if (!(c.host() == g)) throw InputError("case2_diagnostics: colouring is not of this graph");
  if (p.n != g.order()) throw InputError("case2_diagnostics: params n differs from the graph order");
  const int n = g.order();
  const Graph& red = c.red();
  const Graph& blue = c.blue();
  for (int v = 0; v < n; ++v)
    if (red.degree(v) > n - p.x)
      throw InputError("case2_diagnostics: vertex " + std::to_string(v) + " has red degree " +
                       std::to_string(red.degree(v)) + " > n - x = " + std::to_string(n - p.x));

  Case2Report rep;
  rep.params = p;
  rep.delta_g = g.min_degree();
  rep.threshold = degree_threshold(p);
  rep.delta_blue = blue.min_degree();
  rep.max_blue = blue.max_degree();
  const Graph missing = complement(g);
  rep.max_missing = missing.max_degree();
  const Graph h = complement(red);
  rep.max_h = h.max_degree();
  rep.alpha_red = independence_number(red);
  rep.omega_red = clique_number(red);
  const ChromaticResult chi = chromatic_number(h);
  rep.chi_h = chi.chi;
  rep.chi_lower = rep.omega_red > 0 ? ceil_div(n, rep.omega_red) : 0;
  const int t = static_cast<int>(p.t);
  const int r = static_cast<int>(p.r);
  rep.blue_has_path = has_path(blue, t);
  if (!rep.blue_has_path && rep.delta_blue >= t / 2) {
    try {
      rep.partition = path_free_partition(blue, t).parts;
    } catch (const std::exception&) {
      rep.partition.clear();
    }
  }

  for (const VertexSet& comp : connected_components(h)) {
    const InducedSubgraph sub = induced(h, comp);
    if (chromatic_number(sub.graph).chi == rep.chi_h) {
      rep.component = comp;
      rep.component_class = classify_brooks(sub.graph);
      break;
    }
  }
  rep.branch = rep.component_class == BrooksClass::Complete   ? "complete"
               : rep.component_class == BrooksClass::OddCycle ? "odd_cycle"
                                                              : "brooks";

  auto num = [](std::int64_t a, const char* op, std::int64_t b) {
    return std::to_string(a) + " " + op + " " + std::to_string(b);
  };
  const std::int64_t x = p.x, M = p.M;
  rep.links.push_back({"degree_condition", rep.delta_g >= n - x + M, "delta(G) " + num(rep.delta_g, ">=", n - x + M)});
  rep.links.push_back({"missing_degree", rep.max_missing <= x - M - 1,
                       "Delta(missing) " + num(rep.max_missing, "<=", x - M - 1)});
  rep.links.push_back({"blue_min_degree", rep.delta_blue >= M, "delta(B) " + num(rep.delta_blue, ">=", M)});
  rep.links.push_back({"M_ge_t_minus_2", M >= t - 2, "M " + num(M, ">=", t - 2)});
  rep.links.push_back({"blue_pt_free", !rep.blue_has_path,
                       rep.blue_has_path ? "blue P_t present" : "no blue P_t"});
  rep.links.push_back({"blue_max_degree", rep.max_blue <= t - 2, "Delta(B) " + num(rep.max_blue, "<=", t - 2)});
  rep.links.push_back({"claim_alpha", rep.alpha_red <= x - 1, "alpha(R) " + num(rep.alpha_red, "<=", x - 1)});
  rep.links.push_back({"max_H", rep.max_h <= x - M + t - 3, "Delta(H) " + num(rep.max_h, "<=", x - M + t - 3)});
  rep.links.push_back({"red_kr_free", rep.omega_red <= r - 1, "omega(R) " + num(rep.omega_red, "<=", r - 1)});
  rep.links.push_back({"chi_H_ge_x", rep.chi_h >= x, "chi(H) " + num(rep.chi_h, ">=", x)});
  rep.links.push_back({"component_not_complete", rep.component_class != BrooksClass::Complete,
                       std::string("component of H is ") + to_string(rep.component_class)});

  // Odd-cycle branch: every vertex of C would need blue and missing degree
  // exactly one, i.e. a perfect blue matching on an odd vertex set.
  bool matching_ok = true;
  std::string matching_detail = "component is not an odd cycle";
  if (rep.component_class == BrooksClass::OddCycle) {
    matching_ok = rep.component.size() % 2 == 0;
    for (int v : rep.component.members())
      matching_ok = matching_ok && popcount(blue.neighbors(v) & rep.component.bits()) == 1 &&
                    popcount(missing.neighbors(v) & rep.component.bits()) == 1;
    matching_detail = "odd cycle on " + std::to_string(rep.component.size()) +
                      " vertices cannot carry a perfect blue matching";
  }
  rep.links.push_back({"odd_cycle_matching", matching_ok, matching_detail});

  if (rep.branch == "brooks" && !rep.component.empty()) {
    const InducedSubgraph sub = induced(h, rep.component);
    const int delta_c = sub.graph.max_degree();
    rep.links.push_back({"brooks_bound", rep.chi_h <= delta_c, "chi(C) " + num(rep.chi_h, "<=", delta_c)});
  } else {
    rep.links.push_back({"brooks_bound", true, "not applicable in the " + rep.branch + " branch"});
  }
  return rep;
}

std::string SweepReport::summary_json() const {
  nlohmann::ordered_json j;
  j["summary"] = true;
  j["r"] = params.r;
  j["t"] = params.t;
  j["k"] = params.k;
  j["n"] = params.n;
  j["threshold"] = threshold;
  j["mode"] = mode == SweepMode::Exhaustive ? "exhaustive" : "sample";
  j["seed"] = seed;
  j["examined"] = examined;
  j["arrowing"] = arrowing;
  j["undecided"] = undecided;
  j["counterexamples"] = counterexamples.size();
  j["pass"] = pass();
  return j.dump();
}

namespace {

nlohmann::ordered_json instance_line(const SweepInstance& inst) {
  nlohmann::ordered_json j;
  j["index"] = inst.index;
  j["graph6"] = inst.certificate.graph6;
  j["verdict"] = inst.undecided ? "undecided" : to_string(inst.certificate.verdict);
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : inst.certificate.blue_edges) edges.push_back({e.u, e.v});
  j["blue_edges"] = edges;
  j["stats"] = {{"nodes", inst.certificate.stats.nodes}, {"prunes", inst.certificate.stats.prunes}};
  return j;
}

}  // namespace

std::string SweepReport::to_jsonl() const {
  std::string out;
  for (const SweepInstance& inst : instances) out += instance_line(inst).dump() + "\n";
  out += summary_json() + "\n";
  return out;
}

namespace {

SweepInstance decide(const Graph& g, int r, int t, std::uint64_t index, long long budget) {
  SweepInstance inst;
  inst.index = index;
  ArrowOptions ao;
  ao.budget = budget;
  try {
    inst.certificate = arrows(g, r, t, ao);
  } catch (const UndecidedError& e) {
    inst.undecided = true;
    inst.certificate.r = r;
    inst.certificate.t = t;
    inst.certificate.graph6 = to_graph6(g);
    inst.certificate.stats.nodes = e.nodes();
  }
  return inst;
}

void decide_batch(const std::vector<std::pair<std::uint64_t, Graph>>& batch, int r, int t, long long budget,
                  int threads, std::vector<SweepInstance>& out) {
  const std::size_t base = out.size();
  out.resize(base + batch.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < batch.size(); i = next++)
      out[base + i] = decide(batch[i].second, r, t, batch[i].first, budget);
  };
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(batch.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
}

}  // namespace

SweepReport sweep_verify(int r, int t, int k, int n, const SweepOptions& options) {
  SweepReport rep;
  rep.params = GoodnessParams::make(r, t, k, n);
  rep.threshold = degree_threshold(rep.params);
  rep.mode = options.mode;
  rep.seed = options.seed;
  const int min_degree = static_cast<int>(std::max<std::int64_t>(0, rep.threshold));

  std::vector<SweepInstance> results;
  std::vector<std::pair<std::uint64_t, Graph>> batch;
  constexpr std::size_t kBatch = 4096;
  auto flush = [&] {
    decide_batch(batch, r, t, options.budget, options.threads, results);
    batch.clear();
  };
  auto absorb = [&] {
    for (SweepInstance& inst : results) {
      ++rep.examined;
      if (inst.undecided) {
        ++rep.undecided;
        rep.instances.push_back(inst);
        continue;
      }
      if (inst.certificate.verdict == Verdict::Arrows) {
        ++rep.arrowing;
        if (options.keep_instances) rep.instances.push_back(inst);
      } else {
        rep.counterexamples.push_back(inst);
        rep.instances.push_back(inst);
      }
    }
    results.clear();
  };

  if (options.mode == SweepMode::Exhaustive) {
    if (n > kMaxExhaustiveSweepOrder)
      throw CapacityError("sweep_verify: exhaustive mode is limited to n <= " +
                          std::to_string(kMaxExhaustiveSweepOrder));
    std::uint64_t index = 0;
    EnumerationFilter filter;
    filter.min_degree = min_degree;
    for_each_graph(n, filter, [&](const Graph& g) {
      batch.emplace_back(index++, g);
      if (batch.size() == kBatch) {
        flush();
        absorb();
      }
      return true;
    });
  } else {
    if (options.count < 0) throw InputError("sweep_verify: negative sample count");
    for (long long i = 0; i < options.count; ++i) {
      auto rng = sampling::instance_rng(options.seed, static_cast<std::uint64_t>(i));
      batch.emplace_back(i, sampling::threshold_graph(n, min_degree, rng, static_cast<std::uint64_t>(i)));
      if (batch.size() == kBatch) {
        flush();
        absorb();
      }
    }
  }
  flush();
  absorb();

  auto by_digest = [](const SweepInstance& a, const SweepInstance& b) {
    return std::tie(a.certificate.graph6, a.index) < std::tie(b.certificate.graph6, b.index);
  };
  std::sort(rep.instances.begin(), rep.instances.end(), by_digest);
  std::sort(rep.counterexamples.begin(), rep.counterexamples.end(), by_digest);
  return rep;
}

std::string TightnessReport::to_json() const {
  nlohmann::ordered_json j;
  j["r"] = params.r;
  j["t"] = params.t;
  j["k"] = params.k;
  j["n"] = params.n;
  j["min_degree"] = min_degree;
  j["threshold"] = threshold;
  j["good_coloring"] = good_coloring;
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : blue_edges) edges.push_back({e.u, e.v});
  j["blue_edges"] = edges;
  j["tight"] = tight();
  return j.dump();
}

TightnessReport threshold_tightness_scan(int r, int t, int k) {
  const ExtremalConstruction e = build_extremal(r, t, k);
  TightnessReport rep;
  rep.params = e.params;
  rep.min_degree = e.graph.min_degree();
  rep.threshold = degree_threshold(e.params);
  rep.good_coloring = !check_coloring(e.coloring, r, t).has_value();
  rep.blue_edges = e.coloring.blue().edges();
  return rep;
}

}  // namespace rgl
