// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "sfpow/betti.hpp"
#include "sfpow/clutter.hpp"
#include "sfpow/corpus.hpp"
#include "sfpow/fixtures.hpp"

namespace {

using namespace sfpow;

void BM_MfmcParallel(benchmark::State& state) {
  const auto C = clutter_from_ideal(fixture("k23"));
  for (auto _ : state) benchmark::DoNotOptimize(mfmc_check(C));
}

void BM_MfmcSerial(benchmark::State& state) {
  const auto C = clutter_from_ideal(fixture("k23"));
  for (auto _ : state) benchmark::DoNotOptimize(mfmc_check_serial(C));
}

void BM_BettiParallel(benchmark::State& state) {
  const auto J = symbolic_power(cycle_ideal(5), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(J));
}

void BM_BettiSerial(benchmark::State& state) {
  const auto J = symbolic_power(cycle_ideal(5), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers_serial(J));
}

void BM_TranslationParallel(benchmark::State& state) {
  const auto I = cycle_ideal(5);
  for (auto _ : state) benchmark::DoNotOptimize(translation_check(I));
}

void BM_TranslationSerial(benchmark::State& state) {
  const auto I = cycle_ideal(5);
  for (auto _ : state) benchmark::DoNotOptimize(translation_check_serial(I));
}

}  // namespace

BENCHMARK(BM_MfmcParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MfmcSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BettiParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BettiSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TranslationParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TranslationSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
