// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "rgl/arrowing.hpp"
#include "rgl/constructions.hpp"
#include "rgl/errors.hpp"
#include "rgl/families.hpp"
#include "rgl/lemmas.hpp"
#include "rgl/proof_engine.hpp"
#include "rgl/sampling.hpp"
#include "rgl/thresholds.hpp"
#include "support/oracle.hpp"

using namespace rgl;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void fail(const std::string& why) {
    if (pass) note.str("");
    if (!pass) note << "; ";
    pass = false;
    note << why;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome desk_scale_goodness() {
  Outcome o;
  double slowest = 0;
  for (auto [r, t] : {std::pair{3, 3}, {3, 4}, {4, 3}}) {
    const int cut = static_cast<int>(goodness_value(r, t));
    for (int m = 1; m <= 8; ++m) {
      const Graph km = families::complete(m);
      const auto t0 = Clock::now();
      Certificate c;
      try {
        c = arrows(km, r, t);
      } catch (const UndecidedError&) {
        o.fail("K_" + std::to_string(m) + " undecided");
        continue;
      }
      if (m == 7) slowest = std::max(slowest, seconds_since(t0));
      const bool yes = c.verdict == Verdict::Arrows;
      if (yes != (m >= cut))
        o.fail("K_" + std::to_string(m) + " (" + std::to_string(r) + "," + std::to_string(t) + ") wrong verdict");
      if (!verify_certificate(c).ok) o.fail("certificate for K_" + std::to_string(m) + " does not verify");
      if (m <= 5 && yes != oracle::arrows(oracle::Matrix(km), r, t))
        o.fail("unpruned enumeration disagrees on K_" + std::to_string(m));
    }
  }
  if (slowest >= 60) o.fail("K_7 decision took " + std::to_string(slowest) + " s");
  if (o.pass) o.note << "K_m thresholds 5/7/7 reproduced, oracle agrees for m<=5, slowest K_7 " << slowest << " s";
  return o;
}

Outcome tightness() {
  Outcome o;
  int built = 0;
  for (int r = 2; r <= 4; ++r)
    for (int t = 3; t <= 5; ++t)
      for (int k = 1; k <= 2; ++k) {
        if ((r - 1) * (t - 1) * (k + 1) > kMaxVertices) continue;
        const ExtremalConstruction e = build_extremal(r, t, k);
        const ValidationReport rep = validate_extremal(e);
        ++built;
        const std::string tag = "(" + std::to_string(r) + "," + std::to_string(t) + "," + std::to_string(k) + ")";
        for (const CheckEntry& ch : rep.checks)
          if (!ch.pass) o.fail(tag + " " + ch.name + ": " + ch.detail);
        if (e.graph.min_degree() != degree_threshold(e.params) - 1) o.fail(tag + " delta != threshold - 1");
      }
  if (o.pass) o.note << built << " constructions validated, delta = threshold - 1 in each";
  return o;
}

Outcome arithmetic() {
  Outcome o;
  long long checked = 0;
  for (std::int64_t r = 2; r <= 10; ++r)
    for (std::int64_t t = 2; t <= 10; ++t)
      for (std::int64_t k = 1; k <= 10; ++k) {
        const Window w = window(r, t, k);
        for (std::int64_t n = w.lower + 1; n <= w.upper; ++n) {
          const GoodnessParams p = GoodnessParams::make(r, t, k, n);
          ++checked;
          try {
            if (degree_threshold(p) != degree_threshold_shifted(p)) o.fail("forms differ");
          } catch (const InvariantError& e) {
            o.fail(e.what());
          }
        }
      }
  long long identities = 0;
  for (std::int64_t y = 0; y <= 10000; ++y)
    for (std::int64_t k = 1; k <= 100; ++k) {
      ++identities;
      if (!ceiling_identity_check(y, k)) o.fail("ceiling identity y=" + std::to_string(y) + " k=" + std::to_string(k));
    }
  if (o.pass) o.note << checked << " (r,t,k,n) thresholds agree; " << identities << " ceiling identities hold";
  return o;
}

void absorb(Outcome& o, const SweepReport& rep, long long& examined) {
  examined += rep.examined;
  const std::string tag = "(r=" + std::to_string(rep.params.r) + ",t=" + std::to_string(rep.params.t) +
                          ",k=" + std::to_string(rep.params.k) + ",n=" + std::to_string(rep.params.n) + ")";
  if (rep.undecided) o.fail(tag + " " + std::to_string(rep.undecided) + " undecided");
  for (const SweepInstance& inst : rep.counterexamples) {
    std::cerr << "counterexample " << to_json(inst.certificate) << "\n";
    o.fail(tag + " counterexample " + inst.certificate.graph6);
  }
}

Outcome exhaustive_theorem() {
  Outcome o;
  long long examined = 0;
  const auto t0 = Clock::now();
  SweepOptions opts;
  for (int t : {3, 4}) {
    for (int n = t; n <= 7; ++n) {
      const std::int64_t k = k_of(2, t, n);
      if (k < std::max(1, t - 3)) continue;
      absorb(o, sweep_verify(2, t, static_cast<int>(k), n, opts), examined);
    }
  }
  for (int n : {5, 6}) absorb(o, sweep_verify(3, 3, 1, n, opts), examined);
  if (o.pass) o.note << examined << " graphs at or above threshold all arrow (" << seconds_since(t0) << " s)";
  return o;
}

Outcome sampled_theorem() {
  Outcome o;
  long long examined = 0;
  SweepOptions opts;
  opts.mode = SweepMode::Sample;
  opts.count = 10000;
  opts.seed = 20240601;
  absorb(o, sweep_verify(3, 3, 1, 8, opts), examined);
  absorb(o, sweep_verify(3, 4, 1, 12, opts), examined);
  if (o.pass) o.note << examined << " seeded samples, zero counterexamples, zero undecided";
  return o;
}

Outcome witness_soundness() {
  Outcome o;
  struct Case {
    int r, t, n;
  };
  const std::vector<Case> cases{{2, 3, 7},  {2, 4, 9},  {2, 5, 12}, {3, 3, 6},  {3, 3, 8},
                                {3, 4, 11}, {3, 4, 12}, {4, 3, 9},  {4, 4, 12}, {5, 3, 12}};
  int verified = 0, deepest = 0;
  const int total = 1000;
  for (int i = 0; i < total; ++i) {
    const Case& cs = cases[i % cases.size()];
    auto rng = sampling::instance_rng(777, static_cast<std::uint64_t>(i));
    const GoodnessParams p = GoodnessParams::for_order(cs.r, cs.t, cs.n);
    const Graph g = sampling::threshold_graph(cs.n, static_cast<int>(degree_threshold(p)), rng, i);
    const TwoColoring c = sampling::coloring(g, std::uniform_real_distribution<double>(0, 1)(rng), rng);
    try {
      const Extraction ex = extract_witness(g, c, cs.r, cs.t);
      if (!verify_witness(c, ex.witness, cs.r, cs.t)) o.fail("witness rejected on instance " + std::to_string(i));
      else ++verified;
      if (ex.depth > cs.r - 2) o.fail("depth " + std::to_string(ex.depth) + " > r-2");
      deepest = std::max(deepest, ex.depth);
    } catch (const TheoremFalsified& e) {
      std::cerr << "falsified " << e.instance() << "\n";
      o.fail(e.what());
    } catch (const std::exception& e) {
      o.fail(std::string("instance ") + std::to_string(i) + ": " + e.what());
    }
  }
  if (o.pass) o.note << verified << "/" << total << " witnesses verified, deepest recursion " << deepest;
  return o;
}

Outcome lemma_suites() {
  Outcome o;
  const std::vector<lemmas::LemmaReport> reps{
      lemmas::path_length(8, {1, 2, 3}, 1000, 1),
      lemmas::erdos_gallai(8, 1000, 1),
      lemmas::partition(8, {4, 5, 6}, 1000, 1),
      lemmas::brooks(1000, 1, 14),
  };
  for (const auto& rep : reps)
    for (const std::string& g6 : rep.counterexamples) {
      std::cerr << rep.lemma << " counterexample " << g6 << "\n";
      o.fail(rep.lemma + " counterexample " + g6);
    }
  if (o.pass) {
    for (const auto& rep : reps)
      o.note << rep.lemma << " ok [" << rep.exhaustive_graphs << " visited in: " << rep.exhaustive_scope << "; "
             << rep.random_graphs << " random] ";
  }
  return o;
}

Outcome burr() {
  Outcome o;
  for (int r = 2; r <= 5; ++r) {
    const Graph kr = families::complete(r);
    const int chi = chromatic_number(kr).chi;
    const int s = chromatic_surplus(kr);
    for (int t = 2; t <= 6; ++t)
      if (burr_lower_bound(chi, s, t) != goodness_value(r, t))
        o.fail("r=" + std::to_string(r) + " t=" + std::to_string(t));
  }
  if (o.pass) o.note << "burr bound equals (r-1)(t-1)+1 for 2<=r<=5, 2<=t<=6";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"ramsey goodness at desk scale", desk_scale_goodness},
      {"tightness of the construction", tightness},
      {"threshold arithmetic", arithmetic},
      {"theorem, exhaustive", exhaustive_theorem},
      {"theorem, sampled", sampled_theorem},
      {"witness extraction soundness", witness_soundness},
      {"lemma suites", lemma_suites},
      {"burr consistency", burr},
  };
  int failed = 0, index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << index << "] " << c.name << ": " << o.note.str() << std::endl;
  }
  std::cout << (failed ? "acceptance: FAILED " : "acceptance: all criteria passed") << (failed ? std::to_string(failed) : "")
            << std::endl;
  return failed ? 1 : 0;
}
