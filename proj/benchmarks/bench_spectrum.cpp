#include <benchmark/benchmark.h>

#include "derspec/characters.hpp"
#include "derspec/eigenvalues.hpp"
#include "derspec/verify.hpp"

namespace {

using derspec::EigenvalueEngine;

// Fresh engine per iteration: every partition below n is computed once.
void BM_SpectrumCold(benchmark::State& state) {
  auto const n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    EigenvalueEngine engine;
    benchmark::DoNotOptimize(engine.spectrum(n));
  }
}
BENCHMARK(BM_SpectrumCold)->DenseRange(10, 30, 5)->Unit(benchmark::kMillisecond);

void BM_SpectrumWarm(benchmark::State& state) {
  auto const n = static_cast<unsigned>(state.range(0));
  EigenvalueEngine engine;
  engine.spectrum(n);
  for (auto _ : state) benchmark::DoNotOptimize(engine.spectrum(n));
}
BENCHMARK(BM_SpectrumWarm)->DenseRange(10, 30, 5)->Unit(benchmark::kMillisecond);

void BM_CharacterOracle(benchmark::State& state) {
  auto const n = static_cast<unsigned>(state.range(0));
  auto const parts = derspec::enumerate_partitions(n);
  for (auto _ : state) {
    derspec::CharacterEvaluator characters;
    for (auto const& p : parts) benchmark::DoNotOptimize(derspec::eta_oracle(p, characters));
  }
}
BENCHMARK(BM_CharacterOracle)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_LexScan(benchmark::State& state) {
  auto const n = static_cast<unsigned>(state.range(0));
  EigenvalueEngine engine;
  derspec::TheoremVerifier verifier(engine);
  for (auto _ : state) benchmark::DoNotOptimize(verifier.lex_scan(n));
}
BENCHMARK(BM_LexScan)->Arg(15)->Arg(20)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_SweepJobs(benchmark::State& state) {
  auto const jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    EigenvalueEngine engine;
    derspec::TheoremVerifier verifier(engine, jobs);
    benchmark::DoNotOptimize(verifier.magnitude_properties(28));
  }
}
BENCHMARK(BM_SweepJobs)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
BENCHMARK_MAIN();
