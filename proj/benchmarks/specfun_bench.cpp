#include <benchmark/benchmark.h>

#include "rotorqm/specfun.hpp"

namespace {

using namespace rotorqm::specfun;

void BM_BesselJ(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double x = 0.0;
  for (auto _ : state) {
    x += 0.731;
    if (x > 100.0) x -= 100.0;
    benchmark::DoNotOptimize(bessel_j(n, x));
  }
}
BENCHMARK(BM_BesselJ)->Arg(0)->Arg(1)->Arg(10)->Arg(50);

void BM_BesselJPrime(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    x += 0.731;
    if (x > 100.0) x -= 100.0;
    benchmark::DoNotOptimize(bessel_j_prime(7, x));
  }
}
BENCHMARK(BM_BesselJPrime);

void BM_ZeroTableCold(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto kind = state.range(1) == 0 ? ZeroKind::FunctionZero : ZeroKind::DerivativeZero;
  for (auto _ : state) {
    clear_zero_cache();
    benchmark::DoNotOptimize(zero_table(n, kind, kMaxZeroIndex));
  }
}
BENCHMARK(BM_ZeroTableCold)
    ->Args({0, 0})
    ->Args({1, 1})
    ->Args({25, 0})
    ->Args({50, 1})
    ->Unit(benchmark::kMillisecond);

void BM_ZeroLookupCached(benchmark::State& state) {
  bessel_zero(3, 1);
  int s = 0;
  for (auto _ : state) {
    s = s % kMaxZeroIndex + 1;
    benchmark::DoNotOptimize(bessel_zero(3, s));
  }
}
BENCHMARK(BM_ZeroLookupCached);

}  // namespace
