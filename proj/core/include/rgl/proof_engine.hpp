#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rgl/arrowing.hpp"
#include "rgl/errors.hpp"
#include "rgl/graph.hpp"
#include "rgl/thresholds.hpp"

namespace rgl {

/// Thrown when a colouring meets every hypothesis of the degree theorem yet
/// has neither a red K_r nor a blue P_t. `instance` is a JSON object with
/// r, t, graph6 and the blue edges.
class TheoremFalsified : public InvariantError {
 public:
  TheoremFalsified(const std::string& what, std::string instance)
      : InvariantError(what), instance_(std::move(instance)) {}
  const std::string& instance() const { return instance_; }

 private:
  std::string instance_;
};

enum class ProofStep { Base, CaseOne, CaseTwo };
const char* to_string(ProofStep s);

/// One level of the induction. Labels are those of the caller's graph.
struct InductionFrame {
  int clique_target = 2;  // r' at this level
  GoodnessParams params;  // (r', t, k, N) of the current host
  std::int64_t threshold = 0;
  int min_degree = 0;
  VertexList seed;  // pivots chosen so far, pairwise red and red to the host
  ProofStep step = ProofStep::Base;

  // Case 1 only.
  int pivot = -1;
  int pivot_red_degree = 0;
  std::int64_t j = 0;        // (r'-1) x - n
  std::int64_t x_next = 0;   // ceil(N/(r'-2))
  std::int64_t k_next = 0;   // window index of N for r'-1
  std::int64_t threshold_next = 0;
  int min_degree_next = 0;
};

enum class Route {
  BaseRedEdge,
  BaseBluePath,
  IndependentSetPath,  // blue path inside a red-independent set of size x
  FallbackRedClique,
  FallbackBluePath,
};
const char* to_string(Route r);

struct Extraction {
  Witness witness;
  Route route = Route::BaseRedEdge;
  std::vector<InductionFrame> frames;
  /// Case 1 recursions taken; never exceeds r - 2.
  int depth = 0;
  /// Case 2 fallback only: the link of the contradiction chain whose
  /// negation produced the witness.
  std::string checkpoint;
  long long independent_sets_tried = 0;
};

struct ExtractOptions {
  long long independent_set_cap = 10000;
};

/// Follows the induction to a red K_r or blue P_t. Preconditions: r >= 2,
/// t >= 2, n inside a window with k >= max(1, t-3), delta(g) >= threshold,
/// c colours g. Throws InputError/WindowError on precondition failure,
/// InvariantError when a proven intermediate inequality fails, and
/// TheoremFalsified when no witness exists.
Extraction extract_witness(const Graph& g, const TwoColoring& c, int r, int t,
                           const ExtractOptions& options = {});

struct ChainLink {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct Case2Report {
  GoodnessParams params;
  int delta_g = 0;
  std::int64_t threshold = 0;
  int delta_blue = 0;
  int max_blue = 0;
  int max_missing = 0;
  int max_h = 0;
  int alpha_red = 0;  // = omega(H)
  int omega_red = 0;  // = alpha(H)
  int chi_h = 0;
  std::int64_t chi_lower = 0;  // ceil(n / alpha(H))
  bool blue_has_path = false;
  std::vector<VertexSet> partition;  // when Lemma-partition premises hold
  BrooksClass component_class = BrooksClass::Neither;
  VertexSet component;  // component of H attaining chi(H)
  /// "complete", "odd_cycle" or "brooks": which branch of the Brooks
  /// analysis the component falls in.
  std::string branch;
  std::vector<ChainLink> links;

  /// First link in proof order that fails on this instance.
  std::optional<std::string> first_broken() const;
  /// Every link holds. Arithmetically impossible; a bug if ever true.
  bool chain_closed() const;
  std::string to_json() const;
};

/// Evaluates every inequality of the Case 2 contradiction on a concrete
/// colouring. Requires all red degrees <= n - x.
Case2Report case2_diagnostics(const Graph& g, const TwoColoring& c, const GoodnessParams& p);

enum class SweepMode { Exhaustive, Sample };
inline constexpr int kMaxExhaustiveSweepOrder = 7;

struct SweepOptions {
  SweepMode mode = SweepMode::Exhaustive;
  long long count = 0;
  std::uint64_t seed = 0;
  int threads = 1;
  long long budget = default_budget();
  /// Keep every instance (otherwise only counterexamples and undecided).
  bool keep_instances = false;
};

struct SweepInstance {
  std::uint64_t index = 0;
  Certificate certificate;
  bool undecided = false;
};

struct SweepReport {
  GoodnessParams params;
  std::int64_t threshold = 0;
  SweepMode mode = SweepMode::Exhaustive;
  std::uint64_t seed = 0;
  long long examined = 0;  // graphs meeting the degree condition
  long long arrowing = 0;
  long long undecided = 0;
  std::vector<SweepInstance> counterexamples;
  /// Sorted by graph6.
  std::vector<SweepInstance> instances;

  bool pass() const { return counterexamples.empty() && undecided == 0; }
  std::string summary_json() const;
  /// One line per kept instance, then the summary line.
  std::string to_jsonl() const;
};

/// Runs arrows() on every (or a seeded sample of) graph with delta >=
/// threshold. Exhaustive mode is limited to n <= 7.
SweepReport sweep_verify(int r, int t, int k, int n, const SweepOptions& options);

struct TightnessReport {
  GoodnessParams params;
  int min_degree = 0;
  std::int64_t threshold = 0;
  bool good_coloring = false;
  std::vector<Edge> blue_edges;
  bool tight() const { return good_coloring && min_degree == threshold - 1; }
  std::string to_json() const;
};

TightnessReport threshold_tightness_scan(int r, int t, int k);

}  // namespace rgl
