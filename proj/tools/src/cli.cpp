#include "rgl_tools/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rgl/arrowing.hpp"
#include "rgl/constructions.hpp"
#include "rgl/errors.hpp"
#include "rgl/graph_io.hpp"
#include "rgl/lemmas.hpp"
#include "rgl/proof_engine.hpp"
#include "rgl/thresholds.hpp"

namespace rgl::cli {

namespace {

using Json = nlohmann::ordered_json;

struct GraphSource {
  std::string graph6;
  std::string path;
};

struct Common {
  std::string format = "json";
  std::string output;
  std::optional<long long> budget;
  std::uint64_t seed = 0;
  int threads = 1;

  long long effective_budget() const { return budget ? *budget : default_budget(); }
};

void add_graph_source(CLI::App* cmd, GraphSource& src) {
  auto* g6 = cmd->add_option("--graph6", src.graph6, "Graph in graph6");
  auto* file = cmd->add_option("-i,--input", src.path, "File holding graph6 or an edge list");
  g6->excludes(file);
}

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read " + path);
  return read_all(f);
}

Graph load_graph(const GraphSource& src, std::istream& in) {
  if (!src.graph6.empty()) return from_graph6(src.graph6);
  if (!src.path.empty()) return parse_graph(read_file(src.path));
  return parse_graph(read_all(in));
}

// "0 1, 1 2; 2 3" or one pair per line.
std::vector<Edge> parse_edges(const std::string& text) {
  std::string flat = text;
  for (char& c : flat)
    if (c == ',' || c == ';' || c == '-') c = ' ';
  std::istringstream ss(flat);
  std::vector<Edge> edges;
  long long u = 0, v = 0;
  while (ss >> u) {
    if (!(ss >> v)) throw ParseError("blue edge list has an odd number of endpoints");
    if (u < 0 || v < 0 || u >= kMaxVertices || v >= kMaxVertices)
      throw ParseError("blue edge endpoint out of range");
    edges.push_back({static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))});
  }
  if (!ss.eof()) throw ParseError("blue edge list is not a list of integers");
  return edges;
}

Json header(const std::string& command, const Common& c) {
  Json h;
  h["command"] = command;
  h["seed"] = c.seed;
  h["budget"] = c.effective_budget();
  return h;
}

std::string text_header(const std::string& command, const Common& c) {
  return "# rgl " + command + " seed=" + std::to_string(c.seed) + " budget=" + std::to_string(c.effective_budget()) +
         "\n";
}

// Writes the command's report to -o when given, stdout otherwise.
class Sink {
 public:
  Sink(const Common& c, std::ostream& out) : out_(out) {
    if (!c.output.empty()) {
      file_.open(c.output);
      if (!file_) throw InputError("cannot write " + c.output);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : out_; }

 private:
  std::ostream& out_;
  std::ofstream file_;
};

Json edges_json(const std::vector<Edge>& edges) {
  Json a = Json::array();
  for (const Edge& e : edges) a.push_back({e.u, e.v});
  return a;
}

// ---- threshold ---------------------------------------------------------

int cmd_threshold(long long r, long long t, long long n, const Common& c, std::ostream& out) {
  const GoodnessParams p = GoodnessParams::for_order(r, t, n);
  const Window w = window(r, t, p.k);
  const std::int64_t threshold = degree_threshold(p);
  Sink sink(c, out);
  std::ostream& os = sink.stream();
  if (c.format == "text") {
    os << text_header("threshold", c);
    os << "r=" << p.r << " t=" << p.t << " n=" << p.n << "\n";
    os << "k=" << p.k << " x=" << p.x << " M=" << p.M << " threshold=" << threshold << "\n";
    os << "window=(" << w.lower << "," << w.upper << "]"
       << " proven=" << (p.k >= std::max<std::int64_t>(1, p.t - 3) ? "yes" : "no") << "\n";
    return kExitOk;
  }
  Json j;
  j["r"] = p.r;
  j["t"] = p.t;
  j["n"] = p.n;
  j["k"] = p.k;
  j["x"] = p.x;
  j["M"] = p.M;
  j["threshold"] = threshold;
  j["window"] = {w.lower, w.upper};
  j["proven_regime"] = p.k >= std::max<std::int64_t>(1, p.t - 3);
  os << header("threshold", c).dump() << "\n" << j.dump() << "\n";
  return kExitOk;
}

// ---- arrows ------------------------------------------------------------

int cmd_arrows(const Graph& g, int r, int t, const std::optional<std::uint64_t>& shuffle, bool verify,
               const Common& c, std::ostream& out) {
  ArrowOptions opts;
  opts.budget = c.effective_budget();
  opts.threads = c.threads;
  opts.shuffle_seed = shuffle;
  Common hc = c;
  if (shuffle) hc.seed = *shuffle;
  Sink sink(c, out);
  std::ostream& os = sink.stream();

  Certificate cert;
  try {
    cert = arrows(g, r, t, opts);
  } catch (const UndecidedError& e) {
    Json j;
    j["r"] = r;
    j["t"] = t;
    j["graph6"] = to_graph6(g);
    j["verdict"] = "undecided";
    j["stats"] = {{"nodes", e.nodes()}};
    if (c.format == "text")
      os << text_header("arrows", hc) << "verdict=undecided nodes=" << e.nodes() << "\n";
    else
      os << header("arrows", hc).dump() << "\n" << j.dump() << "\n";
    return kExitUndecided;
  }

  std::optional<VerificationResult> check;
  if (verify) {
    VerifyOptions vo;
    vo.budget = opts.budget;
    check = verify_certificate(cert, vo);
  }
  if (c.format == "text") {
    os << text_header("arrows", hc);
    os << "graph6=" << cert.graph6 << " r=" << r << " t=" << t << " verdict=" << to_string(cert.verdict)
       << " nodes=" << cert.stats.nodes << " prunes=" << cert.stats.prunes << "\n";
    if (!cert.blue_edges.empty()) {
      os << "blue:";
      for (const Edge& e : cert.blue_edges) os << " " << e.u << "-" << e.v;
      os << "\n";
    }
    if (check) os << "verified=" << (check->ok ? "yes" : "no") << "\n";
  } else {
    os << header("arrows", hc).dump() << "\n" << to_json(cert) << "\n";
    if (check) os << Json{{"verified", check->ok}, {"detail", check->detail}}.dump() << "\n";
  }
  if (check && !check->ok) return kExitInternal;
  return cert.verdict == Verdict::Arrows ? kExitOk : kExitNegative;
}

// ---- verify ------------------------------------------------------------

int cmd_verify(const std::string& text, bool sampled, int samples, const Common& c, std::ostream& out) {
  const Certificate cert = certificate_from_json(text);
  VerifyOptions vo;
  vo.mode = sampled ? VerifyMode::Sampled : VerifyMode::Full;
  vo.samples = samples;
  vo.seed = c.seed;
  vo.budget = c.effective_budget();
  const VerificationResult res = verify_certificate(cert, vo);
  Sink sink(c, out);
  std::ostream& os = sink.stream();
  if (c.format == "text") {
    os << text_header("verify", c) << "verified=" << (res.ok ? "yes" : "no")
       << " mode=" << (res.mode == VerifyMode::Full ? "full" : "sampled") << " " << res.detail << "\n";
  } else {
    Json j;
    j["verified"] = res.ok;
    j["mode"] = res.mode == VerifyMode::Full ? "full" : "sampled";
    j["detail"] = res.detail;
    os << header("verify", c).dump() << "\n" << j.dump() << "\n";
  }
  return res.ok ? kExitOk : kExitNegative;
}

// ---- construct ---------------------------------------------------------

int cmd_construct(int r, int t, int k, bool verify, const std::string& prefix, const Common& c,
                  std::ostream& out) {
  const ExtremalConstruction e = build_extremal(r, t, k);
  std::optional<ValidationReport> report;
  if (verify) report = validate_extremal(e);

  Json checks = Json::array();
  if (report)
    for (const CheckEntry& ch : report->checks)
      checks.push_back({{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});

  if (!prefix.empty()) {
    std::ofstream g6(prefix + ".g6");
    std::ofstream side(prefix + ".json");
    if (!g6 || !side) throw InputError("cannot write files with prefix " + prefix);
    g6 << to_graph6(e.graph) << "\n";
    side << sidecar_json(e) << "\n";
  }

  const std::int64_t threshold = degree_threshold(e.params);
  if (c.format == "text") {
    out << text_header("construct", c);
    out << "r=" << r << " t=" << t << " k=" << k << " n=" << e.graph.order() << " delta=" << e.graph.min_degree()
        << " threshold=" << threshold << "\n";
    out << "graph6=" << to_graph6(e.graph) << "\n";
    if (report)
      for (const CheckEntry& ch : report->checks)
        out << (ch.pass ? "PASS " : "FAIL ") << ch.name << " " << ch.detail << "\n";
  } else {
    out << header("construct", c).dump() << "\n";
    Json j;
    j["r"] = r;
    j["t"] = t;
    j["k"] = k;
    j["n"] = e.graph.order();
    j["graph6"] = to_graph6(e.graph);
    j["min_degree"] = e.graph.min_degree();
    j["threshold"] = threshold;
    j["blue_edges"] = edges_json(e.coloring.blue().edges());
    if (!prefix.empty()) j["files"] = {prefix + ".g6", prefix + ".json"};
    if (report) {
      j["checks"] = checks;
      j["pass"] = report->all_pass();
    }
    out << j.dump() << "\n";
  }
  return report && !report->all_pass() ? kExitNegative : kExitOk;
}

// ---- witness -----------------------------------------------------------

Json frame_json(const InductionFrame& f) {
  Json j;
  j["step"] = to_string(f.step);
  j["clique_target"] = f.clique_target;
  j["n"] = f.params.n;
  j["k"] = f.params.k;
  j["x"] = f.params.x;
  j["M"] = f.params.M;
  j["threshold"] = f.threshold;
  j["min_degree"] = f.min_degree;
  j["seed"] = f.seed;
  if (f.step == ProofStep::CaseOne) {
    j["pivot"] = f.pivot;
    j["pivot_red_degree"] = f.pivot_red_degree;
    j["j"] = f.j;
    j["x_next"] = f.x_next;
    j["k_next"] = f.k_next;
    j["threshold_next"] = f.threshold_next;
    j["min_degree_next"] = f.min_degree_next;
  }
  return j;
}

int cmd_witness(const Graph& g, const TwoColoring& col, int r, int t, bool trace, const Common& c,
                std::ostream& out) {
  const Extraction ex = extract_witness(g, col, r, t);
  const bool ok = verify_witness(col, ex.witness, r, t);
  Sink sink(c, out);
  std::ostream& os = sink.stream();
  if (c.format == "text") {
    os << text_header("witness", c);
    os << "kind=" << to_string(ex.witness.kind) << " vertices=";
    for (std::size_t i = 0; i < ex.witness.vertices.size(); ++i)
      os << (i ? "," : "") << ex.witness.vertices[i];
    os << " route=" << to_string(ex.route) << " depth=" << ex.depth << " verified=" << (ok ? "yes" : "no") << "\n";
  } else {
    Json j;
    j["kind"] = to_string(ex.witness.kind);
    j["vertices"] = ex.witness.vertices;
    j["verified"] = ok;
    j["route"] = to_string(ex.route);
    j["depth"] = ex.depth;
    if (!ex.checkpoint.empty()) j["checkpoint"] = ex.checkpoint;
    if (trace) {
      Json frames = Json::array();
      for (const InductionFrame& f : ex.frames) frames.push_back(frame_json(f));
      j["frames"] = frames;
    }
    os << header("witness", c).dump() << "\n" << j.dump() << "\n";
  }
  return ok ? kExitOk : kExitInternal;
}

// ---- sweep -------------------------------------------------------------

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(s);
      return {n, n};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ParseError("bad --n range '" + s + "' (expected N or A..B)");
  }
}

int cmd_sweep(int r, int t, int k, const std::string& range, const std::string& mode, long long count,
              bool seed_given, bool all_instances, const Common& c, std::ostream& out) {
  const auto [lo, hi] = parse_range(range);
  if (lo > hi) throw InputError("empty --n range " + range);
  SweepOptions opts;
  opts.mode = mode == "sample" ? SweepMode::Sample : SweepMode::Exhaustive;
  if (opts.mode == SweepMode::Sample && !seed_given) throw InputError("sweep: --seed is required in sample mode");
  opts.count = count;
  opts.seed = c.seed;
  opts.threads = c.threads;
  opts.budget = c.effective_budget();
  opts.keep_instances = all_instances;

  std::vector<SweepReport> reports;
  for (int n = lo; n <= hi; ++n) reports.push_back(sweep_verify(r, t, k, n, opts));

  Sink sink(c, out);
  std::ostream& os = sink.stream();
  bool pass = true;
  bool undecided = false;
  if (c.format == "text") os << text_header("sweep", c);
  else os << header("sweep", c).dump() << "\n";
  for (const SweepReport& rep : reports) {
    pass = pass && rep.pass();
    undecided = undecided || rep.undecided > 0;
    if (c.format == "text") {
      os << "n=" << rep.params.n << " threshold=" << rep.threshold << " examined=" << rep.examined
         << " arrowing=" << rep.arrowing << " undecided=" << rep.undecided
         << " counterexamples=" << rep.counterexamples.size() << (rep.pass() ? " PASS" : " FAIL") << "\n";
      for (const SweepInstance& inst : rep.counterexamples) os << "  counterexample " << to_json(inst.certificate) << "\n";
    } else {
      os << rep.to_jsonl();
    }
  }
  if (pass) return kExitOk;
  return undecided && std::all_of(reports.begin(), reports.end(),
                                  [](const SweepReport& r) { return r.counterexamples.empty(); })
             ? kExitUndecided
             : kExitNegative;
}

// ---- lemma -------------------------------------------------------------

int cmd_lemma(const std::string& id, int exhaustive_n, std::vector<int> ks, std::vector<int> ds, long long trials,
              int max_n, const Common& c, std::ostream& out) {
  lemmas::LemmaReport rep;
  if (id == "path-length") {
    if (ks.empty()) ks = {1, 2, 3};
    rep = lemmas::path_length(exhaustive_n, ks, trials, c.seed, max_n > 0 ? max_n : 16);
  } else if (id == "erdos-gallai") {
    rep = lemmas::erdos_gallai(exhaustive_n, trials, c.seed, max_n > 0 ? max_n : 16);
  } else if (id == "partition") {
    if (ds.empty()) ds = {4, 5, 6};
    rep = lemmas::partition(exhaustive_n, ds, trials, c.seed);
  } else {
    rep = lemmas::brooks(trials, c.seed, max_n > 0 ? max_n : 14);
  }
  Sink sink(c, out);
  std::ostream& os = sink.stream();
  if (c.format == "text") {
    os << text_header("lemma", c);
    os << rep.lemma << " " << rep.parameters << " exhaustive=" << rep.exhaustive_graphs
       << " random=" << rep.random_graphs << " counterexamples=" << rep.counterexamples.size()
       << (rep.pass() ? " PASS" : " FAIL") << "\n";
    for (const std::string& g6 : rep.counterexamples) os << "  " << g6 << "\n";
  } else {
    os << header("lemma", c).dump() << "\n" << rep.to_json() << "\n";
  }
  return rep.pass() ? kExitOk : kExitNegative;
}

void add_common(CLI::App* cmd, Common& c, bool with_seed, bool with_threads) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("-o,--output", c.output, "Write the report here instead of stdout");
  cmd->add_option("--budget", c.budget, "Search node cap (overrides RGL_BUDGET)")->check(CLI::PositiveNumber);
  if (with_seed) cmd->add_option("--seed", c.seed, "Random seed");
  if (with_threads) cmd->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1, 256));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramsey goodness of paths: arrowing, thresholds, constructions and witnesses", "rgl"};
  app.require_subcommand(1);

  Common common;
  GraphSource src;
  int r = 3, t = 3, k = 1;
  long long lr = 3, lt = 3, ln = 0;

  auto* th = app.add_subcommand("threshold", "Degree threshold and window for (r, t, n)");
  th->add_option("-r", lr, "Clique order")->required();
  th->add_option("-t", lt, "Path order")->required();
  th->add_option("-n", ln, "Host order")->required();
  th->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  th->add_option("-o,--output", common.output, "Write the report here instead of stdout");

  std::optional<std::uint64_t> shuffle;
  bool verify = false;
  auto* ar = app.add_subcommand("arrows", "Decide G -> (K_r, P_t)");
  add_graph_source(ar, src);
  ar->add_option("-r", r, "Clique order")->required();
  ar->add_option("-t", t, "Path order")->required();
  ar->add_option("--shuffle-seed", shuffle, "Branch over a seeded edge order");
  ar->add_flag("--verify", verify, "Re-check the certificate");
  add_common(ar, common, false, true);

  std::string cert_path;
  bool sampled = false;
  int samples = 1000;
  auto* ve = app.add_subcommand("verify", "Re-check an arrowing certificate");
  ve->add_option("certificate", cert_path, "Certificate JSON file (stdin when omitted)");
  ve->add_flag("--sampled", sampled, "Sample colourings instead of re-running the search");
  ve->add_option("--samples", samples, "Colourings to sample")->check(CLI::PositiveNumber);
  add_common(ve, common, true, false);

  std::string prefix;
  auto* co = app.add_subcommand("construct", "Build the tight coloured graph at n = (r-1)(t-1)(k+1)");
  co->add_option("-r", r, "Clique order")->required();
  co->add_option("-t", t, "Path order")->required();
  co->add_option("-k", k, "Window index")->required();
  co->add_flag("--verify", verify, "Validate the construction");
  co->add_option("-o,--prefix", prefix, "Write PREFIX.g6 and PREFIX.json");
  co->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string blue_text, blue_file;
  bool all_blue = false, all_red = false, trace = false;
  auto* wi = app.add_subcommand("witness", "Extract a red K_r or blue P_t by following the induction");
  add_graph_source(wi, src);
  wi->add_option("-r", r, "Clique order")->required();
  wi->add_option("-t", t, "Path order")->required();
  auto* b1 = wi->add_option("--blue", blue_text, "Blue edges, e.g. \"0 1,1 2\"");
  auto* b2 = wi->add_option("--blue-file", blue_file, "File of blue edges, one pair per line");
  auto* b3 = wi->add_flag("--all-blue", all_blue, "Colour every edge blue");
  auto* b4 = wi->add_flag("--all-red", all_red, "Colour every edge red");
  b1->excludes(b2, b3, b4);
  b2->excludes(b3, b4);
  b3->excludes(b4);
  wi->add_flag("--trace", trace, "Include the induction frames");
  add_common(wi, common, false, false);

  std::string range, mode = "exhaustive", instances = "failures";
  long long count = 0;
  auto* sw = app.add_subcommand("sweep", "Check the degree theorem on all or sampled graphs");
  sw->add_option("-r", r, "Clique order")->required();
  sw->add_option("-t", t, "Path order")->required();
  sw->add_option("-k", k, "Window index")->required();
  sw->add_option("--n", range, "Host order N or range A..B")->required();
  sw->add_option("--mode", mode, "exhaustive or sample")->check(CLI::IsMember({"exhaustive", "sample"}));
  sw->add_option("--count", count, "Samples per order")->check(CLI::NonNegativeNumber);
  sw->add_option("--instances", instances, "Report every instance or failures only")
      ->check(CLI::IsMember({"all", "failures"}));
  add_common(sw, common, true, true);

  std::string lemma_id;
  int exhaustive_n = 8, max_n = 0;
  std::vector<int> ks, ds;
  long long trials = 1000;
  auto* le = app.add_subcommand("lemma", "Property suites for the path and colouring lemmas");
  le->add_option("id", lemma_id, "path-length | erdos-gallai | partition | brooks")
      ->required()
      ->check(CLI::IsMember({"path-length", "erdos-gallai", "partition", "brooks"}));
  le->add_option("--exhaustive-n", exhaustive_n, "Largest order searched exhaustively")->check(CLI::Range(0, 10));
  le->add_option("--k", ks, "Values of k (path-length)");
  le->add_option("--d", ds, "Values of d (partition)");
  le->add_option("--trials", trials, "Random instances")->check(CLI::NonNegativeNumber);
  le->add_option("--max-n", max_n, "Largest order of random instances")->check(CLI::Range(1, 24));
  add_common(le, common, true, false);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (th->parsed()) {
      common.format = th->count("--format") ? common.format : "text";
      return cmd_threshold(lr, lt, ln, common, out);
    }
    if (ar->parsed()) return cmd_arrows(load_graph(src, in), r, t, shuffle, verify, common, out);
    if (ve->parsed()) return cmd_verify(cert_path.empty() ? read_all(in) : read_file(cert_path), sampled, samples,
                                        common, out);
    if (co->parsed()) return cmd_construct(r, t, k, verify, prefix, common, out);
    if (wi->parsed()) {
      const Graph g = load_graph(src, in);
      std::optional<TwoColoring> col;
      if (all_blue) col = TwoColoring::all_blue(g);
      else if (all_red) col = TwoColoring::all_red(g);
      else if (!blue_file.empty()) col = TwoColoring::from_blue_edges(g, parse_edges(read_file(blue_file)));
      else if (!blue_text.empty()) col = TwoColoring::from_blue_edges(g, parse_edges(blue_text));
      else throw InputError("witness: give --blue, --blue-file, --all-blue or --all-red");
      return cmd_witness(g, *col, r, t, trace, common, out);
    }
    if (sw->parsed())
      return cmd_sweep(r, t, k, range, mode, count, sw->count("--seed") > 0, instances == "all", common, out);
    if (le->parsed()) return cmd_lemma(lemma_id, exhaustive_n, ks, ds, trials, max_n, common, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "invalid certificate: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TheoremFalsified& e) {
    err << "counterexample: " << e.what() << "\n" << e.instance() << "\n";
    return kExitInternal;
  } catch (const InvariantError& e) {
    err << "invariant failure: " << e.what() << "\n";
    return kExitInternal;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}

}  // namespace rgl::cli
