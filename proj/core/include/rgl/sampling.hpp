#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "rgl/arrowing.hpp"
#include "rgl/graph.hpp"

// Seeded graph and colouring samplers. Every sampler draws only from the
// engine it is handed, so a (seed, index) pair reproduces an instance.
namespace rgl::sampling {

using Rng = std::mt19937_64;

/// Independent engine for instance `index` of a run seeded with `seed`.
Rng instance_rng(std::uint64_t seed, std::uint64_t index);

/// G(n, p) with p drawn between min_degree/(n-1) and 1, resampled until
/// delta >= min_degree.
Graph erdos_renyi_min_degree(int n, int min_degree, Rng& rng);

/// Starts from K_n and deletes random edges whose endpoints both stay at or
/// above min_degree; about half the time it runs to an edge-minimal graph,
/// leaving many vertices at exactly min_degree.
Graph near_threshold(int n, int min_degree, Rng& rng);

/// Even index: erdos_renyi_min_degree; odd: near_threshold.
Graph threshold_graph(int n, int min_degree, Rng& rng, std::uint64_t index);

/// Random spanning tree plus G(n, p) edges.
Graph connected(int n, double p, Rng& rng);

/// Uniform-ish d-regular graph by the pairing model, or none after retries.
std::optional<Graph> regular(int n, int d, Rng& rng);

/// Each host edge blue with probability blue_p.
TwoColoring coloring(const Graph& host, double blue_p, Rng& rng);

}  // namespace rgl::sampling
