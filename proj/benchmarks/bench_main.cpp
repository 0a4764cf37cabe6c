#include <benchmark/benchmark.h>

#include "sl21/expression.hpp"
#include "sl21/polyring.hpp"
#include "sl21/singular.hpp"
#include "sl21/zhu.hpp"

using namespace sl21;

namespace {

void BM_NormalOrderFresh(benchmark::State& state) {
  const Element word = parse_expression("e12(2) f1(-1) e2(1) h1(-2) f12(0) e1(-1) f2(2) h2(-1)");
  const Level level{Rational(1, 2)};
  for (auto _ : state) {
    Straightener s(level);
    benchmark::DoNotOptimize(s.normal_order(word));
  }
}
BENCHMARK(BM_NormalOrderFresh);

void BM_FindSingular(benchmark::State& state) {
  const Level level{state.range(0) == 0 ? Rational(-1, 2) : Rational(1, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(find_singular(level));
}
BENCHMARK(BM_FindSingular)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_P0Polynomials(benchmark::State& state) {
  const Level level{Rational(1, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(p0_polynomials(level));
}
BENCHMARK(BM_P0Polynomials)->Unit(benchmark::kMillisecond);

void BM_GroebnerPrimes(benchmark::State& state) {
  const Level level{Rational(1, 2)};
  const auto gens = p0_polynomials(level).basis;
  const auto ord = state.range(0) == 0 ? MonomialOrder::degrevlex : MonomialOrder::lex;
  for (auto _ : state) benchmark::DoNotOptimize(groebner(gens, ord));
}
BENCHMARK(BM_GroebnerPrimes)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
