#include "rgl/arrowing.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <random>
#include <thread>

#include "json.hpp"
#include "rgl/check.hpp"
#include "rgl/errors.hpp"
#include "rgl/graph_io.hpp"

namespace rgl {

TwoColoring::TwoColoring(Graph host, Graph blue) : host_(std::move(host)), blue_(std::move(blue)) {
  if (host_.order() != blue_.order()) throw InputError("colouring: blue graph has a different vertex count");
  for (const Edge& e : blue_.edges()) {
    if (!host_.adjacent(e.u, e.v))
      throw InputError("colouring: blue edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                       " is not a host edge");
  }
  red_ = graph_difference(host_, blue_);
}

TwoColoring TwoColoring::all_blue(const Graph& host) { return {host, host}; }
TwoColoring TwoColoring::all_red(const Graph& host) { return {host, Graph(host.order())}; }

TwoColoring TwoColoring::from_blue_edges(const Graph& host, const std::vector<Edge>& blue_edges) {
  Graph blue(host.order());
  for (const Edge& e : blue_edges) blue.add_edge(e.u, e.v);
  return {host, std::move(blue)};
}

const char* to_string(WitnessKind k) { return k == WitnessKind::RedClique ? "red_clique" : "blue_path"; }
const char* to_string(Verdict v) { return v == Verdict::Arrows ? "arrows" : "not_arrows"; }

std::optional<Witness> check_coloring(const TwoColoring& c, int r, int t) {
  if (r < 2) throw InputError("check_coloring: r must be >= 2");
  if (t < 1) throw InputError("check_coloring: t must be >= 1");
  if (auto clique = find_clique(c.red(), r)) return Witness{WitnessKind::RedClique, clique->members()};
  if (auto path = find_path(c.blue(), t)) return Witness{WitnessKind::BluePath, *path};
  return std::nullopt;
}

bool verify_witness(const TwoColoring& c, const Witness& w, int r, int t) {
  if (w.kind == WitnessKind::RedClique)
    return static_cast<int>(w.vertices.size()) == r && check::is_clique(c.red(), w.vertices);
  return static_cast<int>(w.vertices.size()) == t && check::is_path(c.blue(), w.vertices);
}

long long default_budget() {
  if (const char* env = std::getenv("RGL_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

namespace {

using Rows = std::array<Mask, kMaxVertices>;

// Clique of `need` vertices inside `cand` of the graph given by rows.
bool clique_in(const Rows& adj, Mask cand, int need) {
  if (need <= 0) return true;
  while (popcount(cand) >= need) {
    int v = lowest(cand);
    cand &= cand - 1;
    if (clique_in(adj, cand & adj[v], need - 1)) return true;
  }
  return false;
}

Mask reach(const Rows& adj, int v, Mask within) {
  Mask seen = bit(v), frontier = seen;
  while (frontier) {
    Mask next = 0;
    for_each_bit(frontier, [&](int w) { next |= adj[w]; });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

// Simple path on `need` vertices starting at s, avoiding `blocked`.
bool path_from(const Rows& adj, int s, Mask blocked, int need) {
  if (need <= 1) return true;
  blocked |= bit(s);
  Mask next = adj[s] & ~blocked;
  if (popcount(reach(adj, s, ~blocked | bit(s))) < need) return false;
  while (next) {
    int w = lowest(next);
    next &= next - 1;
    if (path_from(adj, w, blocked, need - 1)) return true;
  }
  return false;
}

// Would adding edge uv create a path on t vertices? Any such path uses uv:
// a simple path ending at u (avoiding v) joined to one starting at v.
bool path_through(const Rows& adj, int cur, Mask left, int left_len, int v, int t) {
  if (path_from(adj, v, left, t - left_len)) return true;
  Mask next = adj[cur] & ~left & ~bit(v);
  while (next) {
    int w = lowest(next);
    next &= next - 1;
    if (path_through(adj, w, left | bit(w), left_len + 1, v, t)) return true;
  }
  return false;
}

bool has_path_rows(const Rows& adj, Mask verts, int t) {
  Mask left = verts;
  while (left) {
    Mask comp = reach(adj, lowest(left), verts);
    left &= ~comp;
    if (popcount(comp) < t) continue;
    for (Mask c = comp; c; c &= c - 1)
      if (path_from(adj, lowest(c), 0, t)) return true;
  }
  return false;
}

enum class Outcome { Exhausted, Found, Budget, Cancelled };

constexpr std::int8_t kUndecided = -1, kRed = 0, kBlue = 1;

struct State {
  Rows red{};
  Rows blue{};
  std::vector<std::int8_t> status;
};

struct Counters {
  long long nodes = 0;
  long long prunes = 0;
};

class Search {
 public:
  Search(const Graph& g, int r, int t, std::vector<Edge> order)
      : g_(g), r_(r), t_(t), order_(std::move(order)) {}

  State root() const {
    State s;
    s.status.assign(order_.size(), kUndecided);
    return s;
  }

  // Subtree rooted at s, stopping at `split_depth` when a frontier sink is
  // given. `stop_at(i)` is polled for cancellation.
  struct Ctx {
    long long cap = 0;
    Counters counters;
    int split_depth = -1;
    std::vector<std::pair<State, Counters>>* frontier = nullptr;
    const std::atomic<long long>* stop_index = nullptr;
    long long my_index = 0;
    std::optional<State> found;
  };

  Outcome explore(State s, int depth, Ctx& ctx) const {
    if (ctx.frontier && depth == ctx.split_depth) {
      ctx.frontier->emplace_back(std::move(s), ctx.counters);
      return Outcome::Exhausted;
    }
    if (++ctx.counters.nodes > ctx.cap) return Outcome::Budget;
    if (ctx.stop_index && (ctx.counters.nodes & 255) == 0 &&
        ctx.stop_index->load(std::memory_order_relaxed) < ctx.my_index)
      return Outcome::Cancelled;
    if (!propagate(s, ctx.counters)) {
      ++ctx.counters.prunes;
      return Outcome::Exhausted;
    }
    int branch = -1;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      if (s.status[i] == kUndecided) {
        branch = static_cast<int>(i);
        break;
      }
    }
    if (branch < 0) {
      ctx.found = std::move(s);
      return Outcome::Found;
    }
    if (complete_if_free(s)) {
      ctx.found = std::move(s);
      return Outcome::Found;
    }
    for (std::int8_t colour : {kBlue, kRed}) {
      State child = s;
      assign(child, branch, colour);
      Outcome o = explore(std::move(child), depth + 1, ctx);
      if (o != Outcome::Exhausted) return o;
    }
    return Outcome::Exhausted;
  }

  std::vector<Edge> blue_edges(const State& s) const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < order_.size(); ++i)
      if (s.status[i] == kBlue) out.push_back(order_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void assign(State& s, std::size_t i, std::int8_t colour) const {
    const Edge& e = order_[i];
    Rows& rows = colour == kRed ? s.red : s.blue;
    rows[e.u] |= bit(e.v);
    rows[e.v] |= bit(e.u);
    s.status[i] = colour;
  }

  bool red_bad(const State& s, const Edge& e) const {
    return clique_in(s.red, s.red[e.u] & s.red[e.v], r_ - 2);
  }

  bool blue_bad(const State& s, const Edge& e) const {
    Mask comp = reach(s.blue, e.u, ~Mask{0}) | reach(s.blue, e.v, ~Mask{0});
    if (popcount(comp) < t_) return false;
    return path_through(s.blue, e.u, bit(e.u), 1, e.v, t_);
  }

  // Forced moves to a fixpoint; false on an edge with no legal colour.
  bool propagate(State& s, Counters& c) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < order_.size(); ++i) {
        if (s.status[i] != kUndecided) continue;
        const bool red_dead = red_bad(s, order_[i]);
        const bool blue_dead = blue_bad(s, order_[i]);
        if (red_dead && blue_dead) return false;
        if (red_dead || blue_dead) {
          assign(s, i, red_dead ? kBlue : kRed);
          ++c.prunes;
          changed = true;
        }
      }
    }
    return true;
  }

  // If every undecided edge can go red without a red K_r (or blue without a
  // blue P_t), the colouring completes to a good one right here.
  bool complete_if_free(State& s) const {
    Rows closure = s.red;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      if (s.status[i] != kUndecided) continue;
      closure[order_[i].u] |= bit(order_[i].v);
      closure[order_[i].v] |= bit(order_[i].u);
    }
    if (!clique_in(closure, g_.vertices(), r_)) {
      for (std::size_t i = 0; i < order_.size(); ++i)
        if (s.status[i] == kUndecided) assign(s, i, kRed);
      return true;
    }
    closure = s.blue;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      if (s.status[i] != kUndecided) continue;
      closure[order_[i].u] |= bit(order_[i].v);
      closure[order_[i].v] |= bit(order_[i].u);
    }
    if (!has_path_rows(closure, g_.vertices(), t_)) {
      for (std::size_t i = 0; i < order_.size(); ++i)
        if (s.status[i] == kUndecided) assign(s, i, kBlue);
      return true;
    }
    return false;
  }

  const Graph& g_;
  int r_;
  int t_;
  std::vector<Edge> order_;
};

struct SubResult {
  Outcome outcome = Outcome::Exhausted;
  Counters counters;
  std::optional<State> found;
};

int split_depth_for(int threads) {
  int d = 0;
  while ((1 << d) < threads) ++d;
  return d;
}

}  // namespace

Certificate arrows(const Graph& g, int r, int t, const ArrowOptions& options) {
  if (r < 2) throw InputError("arrows: r must be >= 2");
  if (t < 1) throw InputError("arrows: t must be >= 1");
  if (options.budget < 1) throw InputError("arrows: budget must be positive");

  Certificate cert;
  cert.r = r;
  cert.t = t;
  cert.graph6 = to_graph6(g);
  cert.mode = "full";
  if (t == 1) {
    // Any vertex is a blue P_1.
    cert.verdict = g.order() >= 1 ? Verdict::Arrows : Verdict::NotArrows;
    return cert;
  }

  std::vector<Edge> order = g.edges();
  if (options.shuffle_seed) {
    std::mt19937_64 rng(*options.shuffle_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  Search search(g, r, t, order);

  Search::Ctx top;
  top.cap = options.budget;
  top.split_depth = split_depth_for(std::max(1, options.threads));
  std::vector<std::pair<State, Counters>> frontier;
  top.frontier = &frontier;
  const Outcome top_outcome = search.explore(search.root(), 0, top);
  if (top_outcome == Outcome::Budget)
    throw UndecidedError("arrows: node budget exhausted", top.counters.nodes);

  std::vector<SubResult> results(frontier.size());
  std::atomic<long long> stop_index{std::numeric_limits<long long>::max()};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < frontier.size(); i = next++) {
      if (stop_index.load() < static_cast<long long>(i)) {
        results[i].outcome = Outcome::Cancelled;
        continue;
      }
      Search::Ctx ctx;
      ctx.cap = options.budget;
      ctx.stop_index = &stop_index;
      ctx.my_index = static_cast<long long>(i);
      results[i].outcome = search.explore(std::move(frontier[i].first), 0, ctx);
      results[i].counters = ctx.counters;
      results[i].found = std::move(ctx.found);
      if (results[i].outcome == Outcome::Found || results[i].outcome == Outcome::Budget) {
        long long cur = stop_index.load();
        while (static_cast<long long>(i) < cur && !stop_index.compare_exchange_weak(cur, static_cast<long long>(i))) {
        }
      }
    }
  };
  const int workers = std::max(1, std::min<int>(options.threads, static_cast<int>(frontier.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  // Re-assemble in sequential DFS order so stats and evidence match a
  // single-threaded run exactly.
  Counters sub;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    const SubResult& res = results[i];
    const Counters& before = frontier[i].second;
    const long long nodes = before.nodes + sub.nodes + res.counters.nodes;
    if (res.outcome == Outcome::Budget || nodes > options.budget)
      throw UndecidedError("arrows: node budget exhausted", nodes);
    if (res.outcome == Outcome::Found) {
      cert.verdict = Verdict::NotArrows;
      cert.blue_edges = search.blue_edges(*res.found);
      cert.stats = {nodes, before.prunes + sub.prunes + res.counters.prunes};
      return cert;
    }
    sub.nodes += res.counters.nodes;
    sub.prunes += res.counters.prunes;
  }
  cert.stats = {top.counters.nodes + sub.nodes, top.counters.prunes + sub.prunes};
  if (cert.stats.nodes > options.budget) throw UndecidedError("arrows: node budget exhausted", cert.stats.nodes);
  if (top_outcome == Outcome::Found) {
    cert.verdict = Verdict::NotArrows;
    cert.blue_edges = search.blue_edges(*top.found);
  } else {
    cert.verdict = Verdict::Arrows;
  }
  return cert;
}

std::string to_json(const Certificate& c) {
  nlohmann::ordered_json j;
  j["r"] = c.r;
  j["t"] = c.t;
  j["graph6"] = c.graph6;
  j["verdict"] = to_string(c.verdict);
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : c.blue_edges) edges.push_back({e.u, e.v});
  j["blue_edges"] = edges;
  j["stats"] = {{"nodes", c.stats.nodes}, {"prunes", c.stats.prunes}};
  j["mode"] = c.mode;
  return j.dump();
}

Certificate certificate_from_json(std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    Certificate c;
    c.r = j.at("r").get<int>();
    c.t = j.at("t").get<int>();
    c.graph6 = j.at("graph6").get<std::string>();
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "arrows") {
      c.verdict = Verdict::Arrows;
    } else if (verdict == "not_arrows") {
      c.verdict = Verdict::NotArrows;
    } else {
      throw ValidationError("certificate: unknown verdict '" + verdict + "'");
    }
    for (const auto& e : j.at("blue_edges")) {
      if (!e.is_array() || e.size() != 2) throw ValidationError("certificate: blue edge must be a pair");
      int u = e[0].get<int>(), v = e[1].get<int>();
      c.blue_edges.push_back({std::min(u, v), std::max(u, v)});
    }
    c.stats.nodes = j.at("stats").at("nodes").get<long long>();
    c.stats.prunes = j.at("stats").at("prunes").get<long long>();
    c.mode = j.at("mode").get<std::string>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("certificate: ") + e.what());
  }
}

VerificationResult verify_certificate(const Certificate& c, const VerifyOptions& options) {
  Graph host;
  try {
    host = from_graph6(c.graph6);
  } catch (const std::exception& e) {
    throw ValidationError(std::string("certificate: bad graph6: ") + e.what());
  }
  if (c.r < 2 || c.t < 1) throw ValidationError("certificate: r must be >= 2 and t >= 1");

  VerificationResult res;
  res.mode = options.mode;
  if (c.verdict == Verdict::NotArrows) {
    res.mode = VerifyMode::Full;
    Graph blue(host.order());
    for (const Edge& e : c.blue_edges) {
      if (e.u < 0 || e.v >= host.order() || e.u == e.v) throw ValidationError("certificate: blue edge out of range");
      if (!host.adjacent(e.u, e.v)) throw ValidationError("certificate: blue edge not in host graph");
      if (blue.adjacent(e.u, e.v)) throw ValidationError("certificate: duplicate blue edge");
      blue.add_edge(e.u, e.v);
    }
    auto w = check_coloring(TwoColoring(host, blue), c.r, c.t);
    res.ok = !w.has_value();
    res.detail = w ? std::string("colouring contains a ") + to_string(w->kind) : "colouring is good";
    return res;
  }

  if (!c.blue_edges.empty()) throw ValidationError("certificate: arrows verdict carries colouring evidence");
  if (options.mode == VerifyMode::Full) {
    ArrowOptions ao;
    ao.budget = options.budget;
    res.ok = arrows(host, c.r, c.t, ao).verdict == Verdict::Arrows;
    res.detail = res.ok ? "search re-run agrees" : "search re-run found a good colouring";
    return res;
  }
  std::mt19937_64 rng(options.seed);
  const auto edges = host.edges();
  for (int s = 0; s < options.samples; ++s) {
    Graph blue(host.order());
    for (const Edge& e : edges)
      if (rng() & 1U) blue.add_edge(e.u, e.v);
    if (!check_coloring(TwoColoring(host, blue), c.r, c.t)) {
      res.ok = false;
      res.detail = "sampled colouring " + std::to_string(s) + " is good";
      return res;
    }
  }
  res.ok = true;
  res.detail = "sampled " + std::to_string(options.samples) + " colourings, all contain a witness (not a proof)";
  return res;
}

}  // namespace rgl
