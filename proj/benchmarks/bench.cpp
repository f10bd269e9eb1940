#include <benchmark/benchmark.h>

#include "parry/beta.hpp"
#include "parry/complexity.hpp"
#include "parry/factor_index.hpp"
#include "parry/substitution.hpp"

using namespace parry;

static void BM_FixedPoint(benchmark::State& state) {
  const auto sub = quadratic_substitution(QuadraticParams(3, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fixed_point_letters(sub, static_cast<std::size_t>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FixedPoint)->Range(1 << 12, 1 << 22);

static void BM_SuffixArray(benchmark::State& state) {
  const auto text = fixed_point_letters(quadratic_substitution(QuadraticParams(5, 2)),
                                        static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    FactorIndex index(text);
    benchmark::DoNotOptimize(index.distinct_count(10));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SuffixArray)->Range(1 << 12, 1 << 20);

static void BM_TowerLengths(benchmark::State& state) {
  for (auto _ : state) {
    UVTower tower(QuadraticParams(6, 1), static_cast<std::size_t>(state.range(0)), 0);
    benchmark::DoNotOptimize(tower.u_length(tower.depth()));
  }
}
BENCHMARK(BM_TowerLengths)->Arg(50)->Arg(200)->Arg(1000);

static void BM_OracleComplexity(benchmark::State& state) {
  const auto sub = quadratic_substitution(QuadraticParams(6, 3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        factor_complexity(sub, static_cast<std::size_t>(state.range(0)), Source::oracle));
  }
}
BENCHMARK(BM_OracleComplexity)->Arg(30)->Arg(120)->Arg(400);

static void BM_BetaIntegers(benchmark::State& state) {
  const QuadraticParams p(4, 1);
  const auto beta = beta_of(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        beta_integers(renyi_of_quadratic(p), beta, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_BetaIntegers)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
