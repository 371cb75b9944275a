#include <benchmark/benchmark.h>

#include <random>

#include "stabkit/matrix.hpp"
#include "stabkit/pencils.hpp"
#include "stabkit/real_roots.hpp"
#include "stabkit/stability.hpp"
#include "stabkit/weyl.hpp"

using namespace stabkit;

namespace {

GaussianMatrix spd(std::size_t order, std::mt19937_64& eng) {
  std::uniform_int_distribution<long> coef(-3, 3);
  GaussianMatrix M(order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) M(i, j) = GaussRat(coef(eng));
  }
  return M.conj_transpose() * M;
}

MultiPoly pencil(std::size_t n, std::size_t order) {
  std::mt19937_64 eng(7);
  std::vector<GaussianMatrix> As;
  for (std::size_t k = 0; k < n; ++k) As.push_back(spd(order, eng));
  return pencil_polynomial(As, GaussianMatrix(order)).poly;
}

WeylOp dense_op(std::size_t order) {
  WeylOp T(2);
  long c = 1;
  for (std::uint32_t a = 0; a <= order; ++a) {
    for (std::uint32_t b = 0; a + b <= order; ++b) T.add_term({a, b}, {b, a}, GaussRat(c++ % 5 - 2));
  }
  return T;
}

}  // namespace

static void BM_PencilDeterminant(benchmark::State& state) {
  std::mt19937_64 eng(1);
  const std::size_t order = static_cast<std::size_t>(state.range(0));
  std::vector<GaussianMatrix> As;
  for (int k = 0; k < 3; ++k) As.push_back(spd(order, eng));
  const GaussianMatrix B(order);
  for (auto _ : state) benchmark::DoNotOptimize(pencil_polynomial(As, B));
}
BENCHMARK(BM_PencilDeterminant)->DenseRange(2, 6, 2);

static void BM_SampleStability(benchmark::State& state) {
  const MultiPoly f = pencil(3, static_cast<std::size_t>(state.range(0)));
  SampleConfig cfg;
  cfg.trials = 50;
  for (auto _ : state) benchmark::DoNotOptimize(check_stable(f, StabilityClass::HR, cfg));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * cfg.trials));
}
BENCHMARK(BM_SampleStability)->DenseRange(2, 5, 1);

static void BM_Compose(benchmark::State& state) {
  const WeylOp S = dense_op(static_cast<std::size_t>(state.range(0)));
  const WeylOp T = adjoint(S);
  for (auto _ : state) benchmark::DoNotOptimize(compose(S, T));
}
BENCHMARK(BM_Compose)->DenseRange(1, 4, 1);

static void BM_StarProduct(benchmark::State& state) {
  const WeylOp S = dense_op(static_cast<std::size_t>(state.range(0)));
  const MultiPoly F = symbol(S), G = symbol(adjoint(S));
  for (auto _ : state) benchmark::DoNotOptimize(star_product(F, G));
}
BENCHMARK(BM_StarProduct)->DenseRange(1, 4, 1);

static void BM_IsolateRoots(benchmark::State& state) {
  // prod_{k=1..d} (t - k/3)
  std::vector<Rational> c{Rational(1)};
  for (long k = 1; k <= state.range(0); ++k) {
    std::vector<Rational> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * Rational(k, 3);
    }
    c = std::move(next);
  }
  const RatPoly p(c);
  for (auto _ : state) benchmark::DoNotOptimize(isolate_real_roots(p));
}
BENCHMARK(BM_IsolateRoots)->RangeMultiplier(2)->Range(4, 32);
BENCHMARK_MAIN();
