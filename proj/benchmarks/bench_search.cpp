#include "dioph/conic.hpp"
#include "dioph/cubic.hpp"
#include "dioph/integral_search.hpp"

#include <benchmark/benchmark.h>

using namespace dioph;

static void BM_SumOfCubes(benchmark::State& state) {
  const Integer m(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sum_of_cubes_solutions(m));
}
BENCHMARK(BM_SumOfCubes)->Arg(1729)->Arg(87539319)->Arg(6963472309);

static void BM_RationalPointSearch(benchmark::State& state) {
  const auto f = BivariatePolynomial::parse("x^2+y^2-1");
  const Integer h(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rational_point_search(f, h));
}
BENCHMARK(BM_RationalPointSearch)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_ChordEnumeration(benchmark::State& state) {
  const auto f = BivariatePolynomial::parse("x^2+y^2-1");
  const Integer h(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_rational_points(f, {-1, 0}, h));
}
BENCHMARK(BM_ChordEnumeration)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_Mordell(benchmark::State& state) {
  const Integer bound(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mordell_integral_search(17, bound));
}
BENCHMARK(BM_Mordell)->Arg(6000)->Arg(60000)->Unit(benchmark::kMillisecond);

static void BM_Holzer(benchmark::State& state) {
  const Conic c(3, 5, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(holzer_decide(c));
}
BENCHMARK(BM_Holzer)->Arg(7)->Arg(101)->Arg(1009);

BENCHMARK_MAIN();
