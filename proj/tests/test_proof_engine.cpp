#include <random>

#include "doctest.h"
#include "json.hpp"
#include "rgl/constructions.hpp"
#include "rgl/errors.hpp"
#include "rgl/families.hpp"
#include "rgl/graph_io.hpp"
#include "rgl/proof_engine.hpp"
#include "rgl/sampling.hpp"
#include "support/oracle.hpp"

using namespace rgl;
namespace fam = rgl::families;

namespace {

void check_frames(const Extraction& ex, int r) {
  CHECK(ex.depth <= r - 2);
  int case_one = 0;
  for (const InductionFrame& f : ex.frames) {
    CHECK(f.min_degree >= f.threshold);
    if (f.step != ProofStep::CaseOne) continue;
    ++case_one;
    CHECK(f.x_next >= f.params.x);
    CHECK(f.k_next >= f.params.k);
    CHECK(f.min_degree_next >= f.threshold_next);
  }
  CHECK(case_one == ex.depth);
}

}  // namespace

TEST_CASE("base case on all-blue graphs") {
  const Graph k3 = fam::complete(3);
  const Extraction a = extract_witness(k3, TwoColoring::all_blue(k3), 2, 3);
  CHECK(a.witness.kind == WitnessKind::BluePath);
  CHECK(a.witness.vertices == VertexList{0, 1, 2});
  CHECK(a.route == Route::BaseBluePath);
  const Graph k4 = fam::complete(4);
  const Extraction b = extract_witness(k4, TwoColoring::all_blue(k4), 2, 4);
  CHECK(b.witness.vertices.size() == 4);
  CHECK(verify_witness(TwoColoring::all_blue(k4), b.witness, 2, 4));
  const Extraction c = extract_witness(k4, TwoColoring::all_red(k4), 2, 4);
  CHECK(c.witness.kind == WitnessKind::RedClique);
  CHECK(c.witness.vertices == VertexList{0, 1});
  CHECK(c.route == Route::BaseRedEdge);
}

TEST_CASE("preconditions are reported with numbers") {
  const Graph k3 = fam::complete(3);
  CHECK_THROWS_AS(extract_witness(k3, TwoColoring::all_red(k3), 3, 3), WindowError);
  const Graph c8 = fam::cycle(8);
  CHECK_THROWS_WITH_AS(extract_witness(c8, TwoColoring::all_red(c8), 3, 3),
                       doctest::Contains("minimum degree 2 below threshold 6"), InputError);
  // k = 1 < t - 3 = 2: outside the proven regime.
  const Graph k8 = fam::complete(8);
  CHECK_THROWS_WITH_AS(extract_witness(k8, TwoColoring::all_red(k8), 2, 5), doctest::Contains("proven regime"),
                       InputError);
  CHECK_THROWS_AS(extract_witness(k3, TwoColoring::all_red(fam::path(3)), 2, 3), InputError);
}

TEST_CASE("augmented construction yields a verified witness") {
  ExtremalConstruction e = build_extremal(3, 3, 1);
  Graph g = e.graph;
  // A red perfect matching across the blue cliques of each part lifts
  // every degree from 5 to the threshold 6.
  for (auto [u, v] : {std::pair{0, 2}, {1, 3}, {4, 6}, {5, 7}}) g.add_edge(u, v);
  REQUIRE(g.min_degree() == 6);
  const TwoColoring c(g, e.coloring.blue());
  const Extraction ex = extract_witness(g, c, 3, 3);
  CHECK(verify_witness(c, ex.witness, 3, 3));
  CHECK(ex.witness.kind == WitnessKind::RedClique);
  check_frames(ex, 3);
}

TEST_CASE("random instances meeting the threshold") {
  struct Case {
    int r, t, n;
  };
  const std::vector<Case> cases{{3, 3, 8}, {3, 3, 6}, {2, 3, 7}, {2, 4, 9}, {3, 4, 12}, {4, 3, 10}, {4, 4, 12}, {2, 5, 9}};
  for (const Case& cs : cases) {
    const GoodnessParams p = GoodnessParams::for_order(cs.r, cs.t, cs.n);
    const int floor_deg = static_cast<int>(degree_threshold(p));
    for (std::uint64_t i = 0; i < 150; ++i) {
      auto rng = sampling::instance_rng(99, i);
      const Graph g = sampling::threshold_graph(cs.n, floor_deg, rng, i);
      const double blue_p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      const TwoColoring c = sampling::coloring(g, blue_p, rng);
      const Extraction ex = extract_witness(g, c, cs.r, cs.t);
      REQUIRE_MESSAGE(verify_witness(c, ex.witness, cs.r, cs.t), to_graph6(g));
      check_frames(ex, cs.r);
    }
  }
}

TEST_CASE("case 1 recursion is exercised") {
  // All-red K_7 with r = 4: every red degree is 6 >= n - x + 1 = 5.
  const Graph k7 = fam::complete(7);
  const Extraction ex = extract_witness(k7, TwoColoring::all_red(k7), 4, 3);
  CHECK(ex.depth == 2);
  CHECK(ex.witness.kind == WitnessKind::RedClique);
  CHECK(ex.witness.vertices == VertexList{0, 1, 2, 3});
  REQUIRE(ex.frames.size() == 3);
  CHECK(ex.frames[0].step == ProofStep::CaseOne);
  CHECK(ex.frames[0].pivot == 0);
  CHECK(ex.frames[1].seed == VertexList{0});
  CHECK(ex.frames[2].step == ProofStep::Base);
  check_frames(ex, 4);
}

TEST_CASE("case 2 takes the independent-set path") {
  // Red K_{3,3}, blue triangles on each side: every red degree is 3 = n - x.
  Graph g = fam::complete(6);
  const TwoColoring c = TwoColoring::from_blue_edges(g, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  const Extraction ex = extract_witness(g, c, 3, 3);
  CHECK(ex.route == Route::IndependentSetPath);
  CHECK(ex.witness.kind == WitnessKind::BluePath);
  CHECK(ex.witness.vertices == VertexList{0, 1, 2});
  CHECK(ex.independent_sets_tried == 1);
}

TEST_CASE("case 2 diagnostics on the construction") {
  const ExtremalConstruction e = build_extremal(3, 3, 1);
  const Case2Report rep = case2_diagnostics(e.graph, e.coloring, e.params);
  CHECK(rep.delta_g == 5);
  CHECK(rep.threshold == 6);
  CHECK(rep.delta_blue == 1);
  CHECK(rep.max_blue == 1);
  CHECK(rep.params.M == 2);
  CHECK_FALSE(rep.chain_closed());
  REQUIRE(rep.first_broken().has_value());
  CHECK(*rep.first_broken() == "degree_condition");
  bool blue_link_broken = false;
  for (const ChainLink& l : rep.links)
    if (l.name == "blue_min_degree") blue_link_broken = !l.holds;
  CHECK(blue_link_broken);
  const auto j = nlohmann::json::parse(rep.to_json());
  CHECK(j["chain_closed"] == false);
}

TEST_CASE("case 2 diagnostics: blue path present") {
  const Graph k5 = fam::complete(5);
  const Case2Report rep = case2_diagnostics(k5, TwoColoring::all_blue(k5), GoodnessParams::for_order(3, 3, 5));
  CHECK(rep.blue_has_path);
  CHECK_FALSE(rep.chain_closed());
  CHECK(*rep.first_broken() == "blue_pt_free");
}

TEST_CASE("case 2 diagnostics: odd-cycle branch") {
  // n = 5, x = 3: red C_5 gives H = complement(red) = C_5 itself.
  const Graph k5 = fam::complete(5);
  Graph pentagram(5);
  for (int i = 0; i < 5; ++i) pentagram.add_edge(i, (i + 2) % 5);
  const TwoColoring c(k5, pentagram);
  const Case2Report rep = case2_diagnostics(k5, c, GoodnessParams::for_order(3, 3, 5));
  CHECK(rep.params.x == 3);
  CHECK(rep.branch == "odd_cycle");
  CHECK(rep.component_class == BrooksClass::OddCycle);
  bool matching_broken = false;
  for (const ChainLink& l : rep.links)
    if (l.name == "odd_cycle_matching") matching_broken = !l.holds;
  CHECK(matching_broken);
  CHECK_FALSE(rep.chain_closed());
  CHECK_THROWS_AS(case2_diagnostics(k5, TwoColoring::all_red(k5), GoodnessParams::for_order(3, 3, 5)), InputError);
}

TEST_CASE("the case 2 chain never closes") {
  for (std::uint64_t i = 0; i < 400; ++i) {
    auto rng = sampling::instance_rng(7, i);
    const int n = 5 + static_cast<int>(i % 6);
    const GoodnessParams p = GoodnessParams::for_order(3, 3, n);
    const Graph g = sampling::threshold_graph(n, static_cast<int>(degree_threshold(p)), rng, i);
    const TwoColoring c = sampling::coloring(g, 0.6, rng);
    bool eligible = true;
    for (int v = 0; v < n; ++v) eligible = eligible && c.red().degree(v) <= n - p.x;
    if (!eligible) continue;
    CHECK_FALSE(case2_diagnostics(g, c, p).chain_closed());
  }
}

TEST_CASE("exhaustive sweeps") {
  SweepOptions o;
  for (int n = 4; n <= 6; ++n) {
    const SweepReport rep = sweep_verify(2, 4, 1, n, o);
    CHECK(rep.pass());
    long long expected = 0;
    oracle::for_each_labelled(n, [&](const oracle::Matrix& m) { expected += m.min_degree() >= n / 2; });
    CHECK(rep.examined == expected);
    CHECK(rep.arrowing == expected);
  }
  const SweepReport five = sweep_verify(3, 3, 1, 5, o);
  CHECK(five.pass());
  long long expected = 0;
  oracle::for_each_labelled(5, [&](const oracle::Matrix& m) {
    if (m.min_degree() < 3) return;
    ++expected;
    CHECK(oracle::arrows(m, 3, 3));
  });
  CHECK(five.examined == expected);
  CHECK_THROWS_AS(sweep_verify(3, 3, 1, 8, o), CapacityError);
}

TEST_CASE("sampled sweeps are reproducible and thread independent") {
  SweepOptions o;
  o.mode = SweepMode::Sample;
  o.count = 2000;
  o.seed = 42;
  o.keep_instances = true;
  const std::string a = sweep_verify(3, 3, 1, 8, o).to_jsonl();
  const std::string b = sweep_verify(3, 3, 1, 8, o).to_jsonl();
  CHECK(a == b);
  o.threads = 3;
  CHECK(sweep_verify(3, 3, 1, 8, o).to_jsonl() == a);
  o.seed = 43;
  CHECK(sweep_verify(3, 3, 1, 8, o).to_jsonl() != a);
  const auto last = a.substr(a.rfind('\n', a.size() - 2) + 1);
  const auto j = nlohmann::json::parse(last);
  CHECK(j["summary"] == true);
  CHECK(j["examined"] == 2000);
  CHECK(j["pass"] == true);
}

TEST_CASE("tightness scan") {
  const TightnessReport a = threshold_tightness_scan(3, 3, 1);
  CHECK(a.tight());
  CHECK(a.min_degree == 5);
  CHECK(a.threshold == 6);
  const TightnessReport b = threshold_tightness_scan(2, 3, 1);
  CHECK(b.tight());
  CHECK(b.min_degree == 1);
  CHECK(b.threshold == 2);
  const TightnessReport c = threshold_tightness_scan(2, 4, 1);
  CHECK(c.tight());
  CHECK(c.min_degree == 2);
  CHECK(c.blue_edges.size() == 6);
  // The tight graph really does not arrow: the degree bound cannot drop.
  CHECK(arrows(build_extremal(2, 4, 1).graph, 2, 4).verdict == Verdict::NotArrows);
  CHECK(arrows(build_extremal(3, 3, 1).graph, 3, 3).verdict == Verdict::NotArrows);
}

TEST_CASE("falsification reports carry the instance") {
  const TheoremFalsified f("no witness", R"({"r":3})");
  CHECK(f.instance() == R"({"r":3})");
  CHECK(std::string(f.what()) == "no witness");
}
