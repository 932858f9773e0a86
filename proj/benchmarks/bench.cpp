#include <benchmark/benchmark.h>

#include "tlbd/jw.hpp"
#include "tlbd/morphism.hpp"
#include "tlbd/qfield.hpp"
#include "tlbd/rep.hpp"
#include "tlbd/theta.hpp"

using namespace tlbd;

static void BM_ratfunc_mul(benchmark::State& state) {
  RatFunc a = qint(5) / q_pow_sum(4);
  RatFunc b = qint(7) / q_pow_sum(3);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ratfunc_mul);

static void BM_compose_basis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto basis = enumerate_basis(n, n);
  TLMorphism f = single_diagram(basis[basis.size() / 2], 1);
  TLMorphism g = single_diagram(basis[basis.size() / 3], 1);
  for (auto _ : state) benchmark::DoNotOptimize(mul(f, g));
}
BENCHMARK(BM_compose_basis)->Arg(3)->Arg(5);

static void BM_jw_d(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    // rebuild from two strands below the requested size to exercise a step
    TLMorphism base = jw(ProjectorKind::D, n - 1, 1);
    TLMorphism pe = tensor_right_identity(base, 1);
    TLMorphism un = gen_u(n - 1, n, 1);
    RatFunc c = RatFunc(1) * q_pow_sum(n - 2) / q_pow_sum(n - 1);
    benchmark::DoNotOptimize(pe + mul(mul(pe, un), pe) * c);
  }
}
BENCHMARK(BM_jw_d)->Arg(3)->Arg(4)->Arg(5);

static void BM_psi_jw(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const TLMorphism& d = jw(ProjectorKind::D, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(psi(d));
}
BENCHMARK(BM_psi_jw)->Arg(3)->Arg(4);

static void BM_theta_matrix(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(theta_matrix(2, 2, 2, 1));
}
BENCHMARK(BM_theta_matrix);

BENCHMARK_MAIN();
