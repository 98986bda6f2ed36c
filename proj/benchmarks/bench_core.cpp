#include <benchmark/benchmark.h>

#include <random>

#include "qaff/centralizer.hpp"
#include "qaff/peterson.hpp"
#include "qaff/symfunc.hpp"

using namespace qaff;

static Polynomial random_poly(std::mt19937& rng, int terms, int maxdeg) {
  std::uniform_int_distribution<int> coef(-9, 9), exp(0, maxdeg), pick(1, 4);
  Polynomial p;
  for (int t = 0; t < terms; ++t) {
    Polynomial m(coef(rng));
    for (int k = exp(rng); k > 0; --k) m *= Polynomial::var(var_a(pick(rng)));
    p += m;
  }
  return p;
}

static void BM_PolynomialMul(benchmark::State& state) {
  std::mt19937 rng(1);
  Polynomial a = random_poly(rng, int(state.range(0)), 6), b = random_poly(rng, int(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PolynomialMul)->RangeMultiplier(4)->Range(8, 512)->Complexity();

static void BM_CentralizerMinors(benchmark::State& state) {
  int n = int(state.range(0));
  for (auto _ : state) {
    SRing S(n);
    Centralizer C(S);
    for (int i = 0; i <= n; ++i) benchmark::DoNotOptimize(C.D(i));
  }
}
BENCHMARK(BM_CentralizerMinors)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_JSolve(benchmark::State& state) {
  int n = int(state.range(0));
  NilHecke H(n);
  auto ws = grassmannian_elements(n, int(state.range(1)));
  for (auto _ : state) {
    Peterson P(H);
    for (auto& w : ws) benchmark::DoNotOptimize(P.j(w));
  }
}
BENCHMARK(BM_JSolve)->Args({2, 6})->Args({3, 4})->Unit(benchmark::kMillisecond);

static void BM_ApplyPsiLongest(benchmark::State& state) {
  int n = int(state.range(0));
  SRing S(n);
  SchubertFamily F(S);
  Polynomial top = F(perm_longest(n));
  for (auto _ : state) {
    Centralizer C(S);
    benchmark::DoNotOptimize(C.apply_psi(top));
  }
}
BENCHMARK(BM_ApplyPsiLongest)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_DualSchur(benchmark::State& state) {
  for (auto _ : state) {
    SymFunc F(int(state.range(0)));
    benchmark::DoNotOptimize(F.dual_schur(Partition({2, 1})));
  }
}
BENCHMARK(BM_DualSchur)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
