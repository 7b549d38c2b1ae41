#include <benchmark/benchmark.h>

#include <random>

#include "rgl/arrowing.hpp"
#include "rgl/constructions.hpp"
#include "rgl/families.hpp"
#include "rgl/graph.hpp"
#include "rgl/proof_engine.hpp"
#include "rgl/sampling.hpp"

namespace {

rgl::Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  rgl::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

void BM_ArrowsComplete(benchmark::State& state) {
  const rgl::Graph g = rgl::families::complete(static_cast<int>(state.range(0)));
  const int r = static_cast<int>(state.range(1));
  const int t = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(rgl::arrows(g, r, t));
}
BENCHMARK(BM_ArrowsComplete)->Args({7, 3, 4})->Args({7, 4, 3})->Args({10, 4, 4})->Args({9, 3, 5});

void BM_ArrowsExtremal(benchmark::State& state) {
  const auto e = rgl::build_extremal(3, 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rgl::arrows(e.graph, 3, 4));
}
BENCHMARK(BM_ArrowsExtremal);

void BM_LongestPath(benchmark::State& state) {
  const rgl::Graph g = random_graph(static_cast<int>(state.range(0)), 0.2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rgl::longest_path(g));
}
BENCHMARK(BM_LongestPath)->Arg(12)->Arg(16)->Arg(20);

void BM_ChromaticNumber(benchmark::State& state) {
  const rgl::Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(rgl::chromatic_number(g));
}
BENCHMARK(BM_ChromaticNumber)->Arg(20)->Arg(30)->Arg(40);

void BM_FindClique(benchmark::State& state) {
  const rgl::Graph g = random_graph(64, 0.5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(rgl::clique_number(g));
}
BENCHMARK(BM_FindClique);

void BM_ExtractWitness(benchmark::State& state) {
  auto rng = rgl::sampling::instance_rng(5, 0);
  const rgl::Graph g = rgl::sampling::threshold_graph(12, 9, rng, 1);
  const rgl::TwoColoring c = rgl::sampling::coloring(g, 0.5, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rgl::extract_witness(g, c, 3, 4));
}
BENCHMARK(BM_ExtractWitness);

}  // namespace

BENCHMARK_MAIN();
