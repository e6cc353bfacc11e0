#include <benchmark/benchmark.h>

#include "qsk/kschur.hpp"
#include "qsk/locring.hpp"
#include "qsk/schubert.hpp"
#include "qsk/symfunc.hpp"
#include "qsk/verify.hpp"

namespace {

// The library memoizes aggressively, so these benchmarks target the
// uncached entry points: expansions, determinants, substitution, equality.

void BM_DividedDifference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const qsk::Polynomial& top = qsk::schubert_poly(qsk::Perm::longest(n));
  for (auto _ : state) benchmark::DoNotOptimize(qsk::divided_difference(1, top));
}
BENCHMARK(BM_DividedDifference)->Arg(5)->Arg(6)->Arg(7);

void BM_ElementaryExpansion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<int> window;
  for (int i = n; i >= 1; --i) window.push_back(i);
  const qsk::Polynomial& top = qsk::schubert_poly(qsk::Perm(window));
  for (auto _ : state) benchmark::DoNotOptimize(qsk::elementary_expansion(top));
}
BENCHMARK(BM_ElementaryExpansion)->Arg(4)->Arg(5);

void BM_QuantumSchurDet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = n / 2;
  const qsk::Partition rect = qsk::rect_shape(n - m, n);
  for (auto _ : state) benchmark::DoNotOptimize(qsk::quantum_schur(rect, m, n));
}
BENCHMARK(BM_QuantumSchurDet)->Arg(4)->Arg(5)->Arg(6);

void BM_PhiSubstitution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const qsk::Polynomial& top = qsk::quantum_schubert(qsk::Perm::longest(n));
  for (auto _ : state) benchmark::DoNotOptimize(qsk::phi(top));
}
BENCHMARK(BM_PhiSubstitution)->Arg(3)->Arg(4);

void BM_LocEq(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const qsk::LocElem lhs = qsk::phi_quantum_schubert(qsk::Perm::longest(n));
  const qsk::LocElem rhs = lhs * qsk::LocElem::from_int(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(qsk::loc_eq(lhs, rhs));
}
BENCHMARK(BM_LocEq)->Arg(4)->Arg(5);

void BM_WeakPieri(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const qsk::Partition lambda({3, 2, 2, 1});
  for (auto _ : state)
    benchmark::DoNotOptimize(qsk::weak_pieri_targets(lambda, 2, n - 1));
}
BENCHMARK(BM_WeakPieri)->Arg(4)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
