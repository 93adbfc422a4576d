#include "quadmaps/brst.hpp"
#include "quadmaps/exactnum.hpp"
#include "quadmaps/groebner.hpp"
#include "quadmaps/semiinf.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace quadmaps;

static void BM_BuchbergerSnake(benchmark::State& state) {
  QuasimapSpec s{static_cast<int>(state.range(0)), 1, 1, Coords::hyperbolic};
  auto rel = relations(s);
  GeneratorSet g(rel.front().ring(), rel);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(g).pairs_reduced);
}
BENCHMARK(BM_BuchbergerSnake)->DenseRange(3, 8);

// Orthonormal relations need genuine completion; cap the degree.
static void BM_BuchbergerOrthonormal(benchmark::State& state) {
  QuasimapSpec s{3, 0, static_cast<int>(state.range(0)), Coords::orthonormal};
  auto rel = relations(s);
  GeneratorSet g(rel.front().ring(), rel);
  BuchbergerOptions opts;
  opts.max_degree = 5;
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(g, opts).basis.polys.size());
}
BENCHMARK(BM_BuchbergerOrthonormal)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_BrstCohomology(benchmark::State& state) {
  QuasimapSpec s{4, 1, 1, Coords::hyperbolic};
  int D = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto cx = BrstComplex::build(s, D);
    benchmark::DoNotOptimize(cohomology(cx).dims.size());
  }
}
BENCHMARK(BM_BrstCohomology)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_SemiInfCohomology(benchmark::State& state) {
  QuasimapSpec s{3, 1, 1, Coords::orthonormal};
  SemiInfWindow w{-2, 2, 0, state.range(0)};
  for (auto _ : state) {
    auto cx = TwoTermComplex::build(s, w);
    benchmark::DoNotOptimize(cohomology(cx).size());
  }
}
BENCHMARK(BM_SemiInfCohomology)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static SparseMatrix random_sparse(std::size_t n, double density, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> c(-5, 5);
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (u(rng) < density) m.add(i, j, Rational(c(rng)));
  m.finalize();
  return m;
}

static void BM_RankModP(benchmark::State& state) {
  auto m = random_sparse(static_cast<std::size_t>(state.range(0)), 0.05, 7);
  for (auto _ : state) benchmark::DoNotOptimize(rank_mod_p(m));
}
BENCHMARK(BM_RankModP)->RangeMultiplier(2)->Range(32, 512);

static void BM_RankExact(benchmark::State& state) {
  auto m = random_sparse(static_cast<std::size_t>(state.range(0)), 0.2, 9).to_dense();
  for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_RankExact)->RangeMultiplier(2)->Range(8, 64);

BENCHMARK_MAIN();
