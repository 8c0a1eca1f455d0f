#include "mskkt/kkt.hpp"
#include "mskkt/replicator.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace mskkt;

Graph random_graph(int n, double p, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng) < p) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

void BM_classify_exact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_graph(n, 0.4, 7);
  const SimplexPoint x = characteristic_vector(n, g.vertices());
  const ParametricProgram prog{g, make_rat(1, 2)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(prog, x));
  }
}
BENCHMARK(BM_classify_exact)->Arg(8)->Arg(32)->Arg(128);

void BM_solve_on_support(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_graph(n, 0.4, 11);
  const ParametricProgram prog{g, make_rat(1, 2)};
  const VertexSet s = g.vertices();
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_on_support(prog, s));
  }
}
BENCHMARK(BM_solve_on_support)->Arg(6)->Arg(10)->Arg(12);

void BM_maximal_cliques(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_graph(n, 0.5, 23);
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximal_cliques(g));
  }
}
BENCHMARK(BM_maximal_cliques)->Arg(16)->Arg(32)->Arg(64);

void BM_automorphisms(benchmark::State& state) {
  // n-cycle: dihedral group of order 2n
  const int n = static_cast<int>(state.range(0));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  const Graph g(n, edges);
  for (auto _ : state) {
    benchmark::DoNotOptimize(automorphisms(g));
  }
}
BENCHMARK(BM_automorphisms)->Arg(8)->Arg(10)->Arg(12);

void BM_replicator_integrate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_graph(n, 0.4, 31);
  std::vector<double> x0(n, 1.0 / n);
  IntegrateOptions opt;
  opt.t_end = 10.0;
  opt.dt = 0.01;
  opt.record_stride = 1000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(g, 0.5, x0, opt));
  }
}
BENCHMARK(BM_replicator_integrate)->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
