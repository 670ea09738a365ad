#include <benchmark/benchmark.h>

#include "taukit/artranslation.hpp"
#include "taukit/k0.hpp"
#include "taukit/nakayama.hpp"
#include "taukit/repr.hpp"

using namespace taukit;

namespace {

AlgebraPtr cyclic_algebra(int n, int c) {
  return algebra_from_kupisch(true, std::vector<int>(static_cast<size_t>(n), c));
}

void bm_basis_enumeration(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    AlgebraPtr a = cyclic_algebra(n, 6);
    benchmark::DoNotOptimize(a->dim());
  }
}
BENCHMARK(bm_basis_enumeration)->Arg(5)->Arg(10)->Arg(20);

void bm_translation(benchmark::State& state) {
  AlgebraPtr a = cyclic_algebra(static_cast<int>(state.range(0)), 6);
  KupischSeries k = kupisch_series(*a);
  Representation m = nakayama_module(a, k, 1, 3);
  for (auto _ : state) {
    Representation t = tau(m);
    benchmark::DoNotOptimize(t.total_dim());
  }
}
BENCHMARK(bm_translation)->Arg(5)->Arg(10);

void bm_inverse_translation(benchmark::State& state) {
  AlgebraPtr a = cyclic_algebra(static_cast<int>(state.range(0)), 6);
  AlgebraPtr op = opposite_algebra(*a);
  Representation s = standard_module(a, StandardKind::simple, 1);
  for (auto _ : state) {
    Representation t = tau_inverse(s, op);
    benchmark::DoNotOptimize(t.total_dim());
  }
}
BENCHMARK(bm_inverse_translation)->Arg(5)->Arg(10);

void bm_decide_tau_map(benchmark::State& state) {
  AlgebraPtr a = cyclic_algebra(static_cast<int>(state.range(0)), 6);
  for (auto _ : state) {
    TauMapVerdict v = decide_tau_map(a);
    benchmark::DoNotOptimize(v.status);
  }
}
BENCHMARK(bm_decide_tau_map)->Arg(5)->Arg(10);

void bm_ext_quiver(benchmark::State& state) {
  AlgebraPtr a = cyclic_algebra(static_cast<int>(state.range(0)), 6);
  for (auto _ : state) {
    Quiver q = ext_quiver(a);
    benchmark::DoNotOptimize(q.num_arrows());
  }
}
BENCHMARK(bm_ext_quiver)->Arg(5)->Arg(10);

void bm_hom_basis(benchmark::State& state) {
  AlgebraPtr a = cyclic_algebra(5, 6);
  Representation p = standard_module(a, StandardKind::projective, 1);
  Representation i = standard_module(a, StandardKind::injective, 1);
  for (auto _ : state) {
    auto maps = hom_basis(p, i);
    benchmark::DoNotOptimize(maps.size());
  }
}
BENCHMARK(bm_hom_basis);

}  // namespace

BENCHMARK_MAIN();
