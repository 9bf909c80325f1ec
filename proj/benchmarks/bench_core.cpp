#include <benchmark/benchmark.h>

#include "sbo/families.hpp"
#include "sbo/rep.hpp"

using namespace sbo;

static void BM_PolyMul(benchmark::State& state) {
  int n = 4;
  Poly a(n), b(n);
  for (int k = 1; k <= n; ++k) {
    a += Poly::variable(n, k) * Poly::variable(n, k);
    b += Poly::variable(n, k).scaled(Scalar::lambda() + Scalar(k));
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMul);

static void BM_FamilyApply(benchmark::State& state) {
  int n = 4, p = 1, order = static_cast<int>(state.range(0));
  OpExpr D = family_first(n, p, order, Presentation::Geometric);
  Expo e;
  e.e[0] = 2;
  e.e[3] = static_cast<uint8_t>(order);
  PolyForm w = PolyForm::monomial(n, 1u, e);
  for (auto _ : state) benchmark::DoNotOptimize(apply(D, w));
}
BENCHMARK(BM_FamilyApply)->Arg(2)->Arg(4);

static void BM_DualAction(benchmark::State& state) {
  int n = 5;
  Expo e;
  e.e[0] = 2;
  e.e[2] = 3;
  PolyForm w = PolyForm::monomial(n, 3u, e);
  Generator g = Generator::eplus(2);
  Scalar l = Scalar::lambda();
  for (auto _ : state) benchmark::DoNotOptimize(act_dual(n, l, g, w));
}
BENCHMARK(BM_DualAction);

BENCHMARK_MAIN();
