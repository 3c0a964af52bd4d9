#include "wernerdec/bounds.hpp"
#include "wernerdec/lp.hpp"
#include "wernerdec/oracle.hpp"
#include "wernerdec/polytope.hpp"
#include "wernerdec/symmetric.hpp"

#include <benchmark/benchmark.h>

using namespace wernerdec;

static void BM_VMatrix(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(v_matrix(m, 10));
}
BENCHMARK(BM_VMatrix)->Arg(4)->Arg(8);

static void BM_SolveLP(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Rational p(2, 5);
  const LPInstance inst = build_lp(n, n, 3, p, p);
  for (auto _ : state) benchmark::DoNotOptimize(solve_lp(inst));
}
BENCHMARK(BM_SolveLP)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_LpThreshold(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(lp_threshold(n, 3, Rational(1) / 10000));
}
BENCHMARK(BM_LpThreshold)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_DenseHq(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RationalMatrix q = canonical_q(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::dense_hq(q, n, n, 2));
}
BENCHMARK(BM_DenseHq)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_DenseSpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RationalMatrix q = canonical_q(n, 2);
  const DenseSymmetric h = oracle::dense_hq(q, n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_eigenvalues(h.mat));
}
BENCHMARK(BM_DenseSpectrum)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_VertexEnumeration(benchmark::State& state) {
  const HalfspaceSystem sys = build_system(5);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_vertices(sys));
}
BENCHMARK(BM_VertexEnumeration);

BENCHMARK_MAIN();
