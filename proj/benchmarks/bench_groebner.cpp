#include "dioph/function_field.hpp"
#include "dioph/groebner.hpp"
#include "dioph/parser.hpp"

#include <benchmark/benchmark.h>

using namespace dioph;

namespace {

std::vector<MultivariatePolynomial> system(const std::vector<std::string>& texts, MonomialOrder order) {
  const std::vector<std::string> vars{"x", "y", "z"};
  std::vector<MultivariatePolynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, vars, order));
  return out;
}

}  // namespace

static void BM_Cyclic3(benchmark::State& state) {
  const auto order = state.range(0) == 0 ? MonomialOrder::Lex : MonomialOrder::GrevLex;
  const auto in = system({"x+y+z", "x*y+y*z+z*x", "x*y*z-1"}, order);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(in, order));
}
BENCHMARK(BM_Cyclic3)->Arg(0)->Arg(1);

static void BM_SymmetricSystem(benchmark::State& state) {
  const auto in = system({"x^2+y^2+z^2-3", "x*y*z-1", "x+y+z-3"}, MonomialOrder::Lex);
  for (auto _ : state) benchmark::DoNotOptimize(solve_zero_dimensional(buchberger(in, MonomialOrder::Lex)));
}
BENCHMARK(BM_SymmetricSystem);

static void BM_CircleParametrizationSearch(benchmark::State& state) {
  const auto circle = FunctionFieldCurve::parse("x^2+y^2-1");
  FFSearchOptions o;
  o.pins = {{0, 1, 0}, {1, 0, 1}, {-1, 0, -1}};
  for (auto _ : state) benchmark::DoNotOptimize(search_ff_solutions(circle, 2, o));
}
BENCHMARK(BM_CircleParametrizationSearch)->Unit(benchmark::kMillisecond);

static void BM_TDiscriminant(benchmark::State& state) {
  const auto curve = FunctionFieldCurve::parse("y^2-x^3-t*x-1");
  for (auto _ : state) benchmark::DoNotOptimize(t_discriminant(curve));
}
BENCHMARK(BM_TDiscriminant);

BENCHMARK_MAIN();
