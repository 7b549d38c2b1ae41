#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Property harnesses for the path and colouring lemmas the degree theorem
// rests on: exhaustive over small orders, seeded random beyond.
namespace rgl::lemmas {

struct LemmaReport {
  std::string lemma;
  std::string parameters;
  /// What the exhaustive part enumerates. For path-length and
  /// erdos-gallai it is the set of would-be counterexamples (hypothesis
  /// met, conclusion failed), generated with path-freeness pruning, so
  /// every visited graph is a counterexample.
  std::string exhaustive_scope;
  long long exhaustive_graphs = 0;  // graphs visited by that enumeration
  long long random_graphs = 0;
  std::vector<std::string> counterexamples;  // graph6
  bool pass() const { return counterexamples.empty(); }
  std::string to_json() const;
};

/// delta >= floor(n/(k+1)) => path on >= ceil(n/k) vertices. Exhaustive
/// part searches, for every n <= max_n, all graphs meeting the degree
/// bound that lack such a path (pruned enumeration); random part samples
/// n <= random_max_n near the degree bound.
LemmaReport path_length(int max_n, const std::vector<int>& ks, long long trials, std::uint64_t seed,
                        int random_max_n = 16);

/// Connected, n >= 2 delta + 1 => path on >= 2 delta + 1 vertices.
LemmaReport erdos_gallai(int max_n, long long trials, std::uint64_t seed, int random_max_n = 16);

/// P_d-free with delta >= floor(d/2) => Hamiltonian components of order
/// floor(d/2)+1 .. d-1.
LemmaReport partition(int max_n, const std::vector<int>& ds, long long trials, std::uint64_t seed);

/// brooks_coloring is proper and within Delta colours off the two exceptional
/// families; exact chi agrees (omega <= chi <= Delta+1, equality only for the
/// exceptions). Random connected and random regular graphs up to max_n.
LemmaReport brooks(long long trials, std::uint64_t seed, int max_n = 14);

}  // namespace rgl::lemmas
