#include <benchmark/benchmark.h>

#include "dualkit/power_series.hpp"
#include "dualkit/riordan.hpp"
#include "dualkit/sequences.hpp"

using dualkit::PowerSeries;
using dualkit::Rational;

namespace {

// 1 + t/2 + t^2/3 + ... : dense, with growing denominators.
PowerSeries harmonic_like(std::size_t n) {
  std::vector<Rational> c;
  for (std::size_t k = 0; k <= n; ++k) c.emplace_back(1, static_cast<long>(k + 1));
  return PowerSeries(c, n);
}

PowerSeries shifted(std::size_t n) {
  std::vector<Rational> c{Rational(0)};
  for (std::size_t k = 1; k <= n; ++k) c.emplace_back(1, static_cast<long>(k));
  return PowerSeries(c, n);
}

void BM_Multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = harmonic_like(n);
  for (auto _ : state) benchmark::DoNotOptimize(f * f);
}

void BM_Reciprocal(benchmark::State& state) {
  const auto f = harmonic_like(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reciprocal(f));
}

void BM_Compose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = harmonic_like(n);
  const auto g = shifted(n);
  for (auto _ : state) benchmark::DoNotOptimize(compose(f, g));
}

void BM_CompositionalInverse(benchmark::State& state) {
  const auto h = shifted(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compositional_inverse(h));
}

void BM_RiordanMatrix(benchmark::State& state) {
  const auto r = dualkit::builtin(dualkit::Builtin::R3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(r.matrix());
}

void BM_RiordanInverse(benchmark::State& state) {
  const auto r = dualkit::builtin(dualkit::Builtin::Pascal, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(inverse(r));
}

}  // namespace

BENCHMARK(BM_Multiply)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_Reciprocal)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_Compose)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_CompositionalInverse)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_RiordanMatrix)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_RiordanInverse)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK_MAIN();
