#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rgl/graph.hpp"

namespace rgl {

/// Red/blue partition of a host graph's edges. Only the blue edges are
/// stored; red is whatever remains of the host.
class TwoColoring {
 public:
  /// Throws InputError unless blue is a spanning subgraph of host.
  TwoColoring(Graph host, Graph blue);
  static TwoColoring all_blue(const Graph& host);
  static TwoColoring all_red(const Graph& host);
  static TwoColoring from_blue_edges(const Graph& host, const std::vector<Edge>& blue_edges);

  const Graph& host() const { return host_; }
  const Graph& blue() const { return blue_; }
  const Graph& red() const { return red_; }

 private:
  Graph host_;
  Graph blue_;
  Graph red_;
};

enum class WitnessKind { RedClique, BluePath };
const char* to_string(WitnessKind k);

struct Witness {
  WitnessKind kind = WitnessKind::RedClique;
  /// Clique ascending; path in traversal order.
  VertexList vertices;

  bool operator==(const Witness&) const = default;
};

/// Red K_r first, then blue P_t; each the lexicographically least one.
/// None means the colouring is good for (K_r, P_t).
std::optional<Witness> check_coloring(const TwoColoring& c, int r, int t);

/// Independent re-check of a witness against raw adjacency.
bool verify_witness(const TwoColoring& c, const Witness& w, int r, int t);

enum class Verdict { Arrows, NotArrows };
const char* to_string(Verdict v);

struct SearchStats {
  long long nodes = 0;
  long long prunes = 0;
};

struct Certificate {
  int r = 2;
  int t = 2;
  std::string graph6;
  Verdict verdict = Verdict::Arrows;
  /// Blue edges of a good colouring when verdict is NotArrows; else empty.
  std::vector<Edge> blue_edges;
  SearchStats stats;
  std::string mode = "full";
};

/// Stable field order: r, t, graph6, verdict, blue_edges, stats, mode.
std::string to_json(const Certificate& c);
/// Throws ValidationError on missing or mistyped fields.
Certificate certificate_from_json(std::string_view text);

inline constexpr long long kDefaultBudget = 1LL << 24;
/// RGL_BUDGET when set to a positive integer, kDefaultBudget otherwise.
long long default_budget();

struct ArrowOptions {
  long long budget = default_budget();
  /// Workers; the search tree is split on the first ceil(log2(threads))
  /// decisions. Verdict, evidence and stats do not depend on this.
  int threads = 1;
  /// Branch over a seeded random edge permutation instead of lex order.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Decides G -> (K_r, P_t). Throws UndecidedError when the node budget runs
/// out; InputError for r < 2 or t < 1.
Certificate arrows(const Graph& g, int r, int t, const ArrowOptions& options = {});

enum class VerifyMode { Full, Sampled };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::Full;
  /// Sampled mode: random colourings checked for a witness.
  int samples = 1000;
  std::uint64_t seed = 0;
  long long budget = default_budget();
};

struct VerificationResult {
  bool ok = false;
  VerifyMode mode = VerifyMode::Full;
  std::string detail;
};

/// NotArrows: rebuilds the colouring and requires check_coloring == none.
/// Arrows: re-runs the search (Full) or samples colourings (Sampled; not a
/// proof, labelled as such). Malformed evidence throws ValidationError.
VerificationResult verify_certificate(const Certificate& c, const VerifyOptions& options = {});

}  // namespace rgl
