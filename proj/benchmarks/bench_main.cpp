#include <benchmark/benchmark.h>

#include "ktrunc/band_complex.hpp"
#include "ktrunc/functorial.hpp"
#include "ktrunc/kgroups.hpp"
#include "ktrunc/snf.hpp"

using namespace ktrunc;

namespace {

void BM_ClosedFormGrid(benchmark::State& state) {
  const i64 e_max = state.range(0);
  for (auto _ : state) {
    i64 sum = 0;
    for (i64 e = 1; e <= e_max; ++e)
      for (i64 i = 1; i <= 40; ++i) sum += k_closed_form(Prime(3), e, i).total;
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_ClosedFormGrid)->Arg(4)->Arg(12);

void BM_WittForm(benchmark::State& state) {
  for (auto _ : state) {
    i64 sum = 0;
    for (i64 i = 1; i <= 40; ++i) sum += k_witt_form(Prime(2), 12, i).total;
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_WittForm);

void BM_SNF(benchmark::State& state) {
  const i64 n = state.range(0);
  IntMatrix m(n, n);
  i64 seed = 7;
  for (auto& x : m.a) {
    seed = (seed * 1103515245 + 12345) % (1L << 31);
    x = seed % 41 - 20;
  }
  for (auto _ : state) {
    SNFResult s = smith_normal_form(m);
    benchmark::DoNotOptimize(s.divisors);
  }
}
BENCHMARK(BM_SNF)->Arg(8)->Arg(16)->Arg(32);

void BM_H1Fiber(benchmark::State& state) {
  const i64 e = state.range(0);
  for (auto _ : state) {
    i64 sum = 0;
    for (i64 j = 1; j <= 15; j += 2)
      sum += h1_fiber_lengths(Prime(2), e, 6, j, auto_r_max(Prime(2), e, 6, j));
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_H1Fiber)->Arg(2)->Arg(6);

void BM_EllGrid(benchmark::State& state) {
  for (auto _ : state) {
    i64 sum = 0;
    for (i64 j = 1; j <= 60; j += 2)
      for (i64 i = 1; i <= 100; ++i) sum += ell({2, 12, 11, i, j});
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_EllGrid);

void BM_ProductOracle(benchmark::State& state) {
  GeneratorDescriptor a12 = describe_generator(Parity::a, Prime(3), 2, 1, 2);
  for (auto _ : state) {
    ProductResult r = product_oracle(a12, a12);
    benchmark::DoNotOptimize(r.lambda);
  }
}
BENCHMARK(BM_ProductOracle);

}  // namespace

BENCHMARK_MAIN();
