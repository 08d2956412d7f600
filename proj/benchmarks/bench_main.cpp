#include <benchmark/benchmark.h>

#include "carlitz/elliptic.hpp"
#include "carlitz/hypergeometric.hpp"
#include "carlitz/operators.hpp"
#include "carlitz/spectral.hpp"

using namespace carlitz;

static void BM_MakeContext(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(make_context(0.5));
  }
}
BENCHMARK(BM_MakeContext);

static void BM_JacobiElliptic(benchmark::State& state) {
  const EllipticContext ctx = make_context(0.5);
  double u = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacobi_elliptic(u, ctx));
    u += 1e-3;
    if (u > 4.0 * ctx.K) u = 0.1;
  }
}
BENCHMARK(BM_JacobiElliptic);

static void BM_Gauss2F1(benchmark::State& state) {
  const double n = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gauss_2f1(n + 0.5, 0.5, n + 2.0, 0.25));
  }
}
BENCHMARK(BM_Gauss2F1)->Arg(4)->Arg(64)->Arg(400);

static void BM_BuildHankel(benchmark::State& state) {
  const std::size_t N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_hankel(Tag::fpp, 0.5, N));
  }
}
BENCHMARK(BM_BuildHankel)->Arg(32)->Arg(128);

static void BM_DenseEigen(benchmark::State& state) {
  const std::size_t N = static_cast<std::size_t>(state.range(0));
  const WeightedHankelOperator H = build_hankel(Tag::p, 0.5, N);
  const std::vector<double> M = H.dense();
  for (auto _ : state) {
    benchmark::DoNotOptimize(dense_symmetric_eigen(M, N, 8));
  }
}
BENCHMARK(BM_DenseEigen)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_TridiagonalEigen(benchmark::State& state) {
  const JacobiOperator J = build_jacobi(Tag::p, 0.5, 300);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tridiagonal_eigen(J, 5));
  }
}
BENCHMARK(BM_TridiagonalEigen)->Unit(benchmark::kMillisecond);

static void BM_CommutatorResidual(benchmark::State& state) {
  const WeightedHankelOperator H = build_hankel(Tag::f, 0.5, 128);
  const JacobiOperator J = build_jacobi(Tag::f, 0.5, 128);
  for (auto _ : state) {
    benchmark::DoNotOptimize(commutator_residual(H, J));
  }
}
BENCHMARK(BM_CommutatorResidual)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
