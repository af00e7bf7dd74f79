#include <benchmark/benchmark.h>

#include "qva/characters.hpp"
#include "qva/g_series.hpp"
#include "qva/ideal.hpp"
#include "qva/quasi_particle.hpp"
#include "qva/relations.hpp"
#include "qva/rmatrix.hpp"
#include "qva/vertex.hpp"

using namespace qva;

static void BM_GSeries(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(g_series(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_GSeries)->Arg(10)->Arg(30)->Arg(60);

static void BM_RMatrixUnitarity(benchmark::State &state) {
  const VarSpace space = rmatrix_space(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(rbar(space, 0) * rbar(space, 0, {-1, 0}));
}
BENCHMARK(BM_RMatrixUnitarity)->Arg(10)->Arg(20);

static void BM_EnumerateBasis(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_qp_basis(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateBasis)->Arg(10)->Arg(20)->Arg(30);

static void BM_ClassicalIdealRank(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(classical_ideal_rank(1, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ClassicalIdealRank)->Arg(12)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_QuotientCharacter(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(character_quotient(2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_QuotientCharacter)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);

static void BM_TransitionBlock(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(classical_block_invertible(static_cast<int>(state.range(0)), 1));
}
BENCHMARK(BM_TransitionBlock)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_CombinedRelation(benchmark::State &state) {
  const int p = static_cast<int>(state.range(0));
  const AlphaSolution s = solve_alpha(p, 5, 2 * p, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(valuation_check(s, static_cast<std::size_t>(2 * p) + 1, 2));
}
BENCHMARK(BM_CombinedRelation)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_SLocality(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(check_s_locality(1, static_cast<std::size_t>(state.range(0)), 3, 1));
}
BENCHMARK(BM_SLocality)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
