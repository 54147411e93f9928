#include "dioph/cubic.hpp"

#include <benchmark/benchmark.h>

using namespace dioph;

static void BM_ScalarMultiple(benchmark::State& state) {
  const WeierstrassCurve e(0, -2);
  const EllipticPoint g = EllipticPoint::at(3, 5);
  const Integer n(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(e.multiply(g, n));
}
// Heights grow quadratically in n, so the cost grows much faster than log n.
BENCHMARK(BM_ScalarMultiple)->RangeMultiplier(4)->Range(4, 128);

static void BM_TangentChain(benchmark::State& state) {
  const auto f = BivariatePolynomial::parse("x^3+y^3-1729");
  for (auto _ : state) {
    RationalPoint p{1, 12};
    for (int i = 0; i < state.range(0); ++i) p = *tangent_third_point(f, p);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_TangentChain)->DenseRange(1, 5);

static void BM_FermatTransformRoundTrip(benchmark::State& state) {
  const FermatCubicTransform t(1729);
  const RationalPoint p{9, 10};
  for (auto _ : state) benchmark::DoNotOptimize(t.inverse(t.forward(p)));
}
BENCHMARK(BM_FermatTransformRoundTrip);

BENCHMARK_MAIN();
