#include "rgl/sampling.hpp"

#include <algorithm>
#include <vector>

#include "rgl/errors.hpp"

namespace rgl::sampling {

Rng instance_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

namespace {

double uniform(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

void check_degree(int n, int min_degree) {
  if (n < 0 || n > kMaxVertices) throw CapacityError("sampler: order outside 0..64");
  if (n > 0 && min_degree > n - 1) throw InputError("sampler: min degree above n-1");
}

}  // namespace

Graph erdos_renyi_min_degree(int n, int min_degree, Rng& rng) {
  check_degree(n, min_degree);
  const double floor_p = n > 1 ? static_cast<double>(min_degree) / (n - 1) : 0.0;
  double p = floor_p + (1.0 - floor_p) * uniform(rng);
  for (int attempt = 0;; ++attempt) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (uniform(rng) < p) g.add_edge(u, v);
    if (g.min_degree() >= min_degree) return g;
    if (attempt % 64 == 63) p = std::min(1.0, p + (1.0 - p) / 4 + 1e-9);
  }
}

Graph near_threshold(int n, int min_degree, Rng& rng) {
  check_degree(n, min_degree);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  std::vector<Edge> order = g.edges();
  std::shuffle(order.begin(), order.end(), rng);
  std::size_t stop = order.size();
  if (rng() & 1U) stop = std::uniform_int_distribution<std::size_t>(0, order.size())(rng);
  for (std::size_t i = 0; i < stop; ++i) {
    const Edge& e = order[i];
    if (g.degree(e.u) > min_degree && g.degree(e.v) > min_degree) g.remove_edge(e.u, e.v);
  }
  return g;
}

Graph threshold_graph(int n, int min_degree, Rng& rng, std::uint64_t index) {
  return index % 2 == 0 ? erdos_renyi_min_degree(n, min_degree, rng) : near_threshold(n, min_degree, rng);
}

Graph connected(int n, double p, Rng& rng) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v) && uniform(rng) < p) g.add_edge(u, v);
  return g;
}

std::optional<Graph> regular(int n, int d, Rng& rng) {
  if (d < 0 || d >= n || (n * d) % 2 != 0) return std::nullopt;
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<int> points;
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < d; ++i) points.push_back(v);
    std::shuffle(points.begin(), points.end(), rng);
    Graph g(n);
    bool ok = true;
    for (std::size_t i = 0; ok && i < points.size(); i += 2) {
      int u = points[i], v = points[i + 1];
      if (u == v || g.adjacent(u, v)) ok = false;
      else g.add_edge(u, v);
    }
    if (ok) return g;
  }
  return std::nullopt;
}

TwoColoring coloring(const Graph& host, double blue_p, Rng& rng) {
  Graph blue(host.order());
  for (const Edge& e : host.edges())
    if (uniform(rng) < blue_p) blue.add_edge(e.u, e.v);
  return {host, std::move(blue)};
}

}  // namespace rgl::sampling
