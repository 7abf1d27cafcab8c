#include <benchmark/benchmark.h>

#include <cstdint>

#include "bench_util.hpp"
#include "equiseq/subcadence.hpp"
#include "equiseq/text.hpp"

namespace {

void SubcadenceSplit(benchmark::State& state) {
  const equiseq::Text text(benchutil::make_text(state.range(0), 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(equiseq::subcadence::count_split(text, 4));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(SubcadenceSplit)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

void SubcadenceBitParallel(benchmark::State& state) {
  const equiseq::Text text(benchutil::make_text(state.range(0), 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(equiseq::subcadence::count_bitpar(text, 4));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(SubcadenceBitParallel)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

// Pairs shines on large alphabets where each character is rare.
void SubcadencePairs(benchmark::State& state) {
  const equiseq::Text text(benchutil::make_text(state.range(0), 26));
  const equiseq::subcadence::Query q{.k = 4, .strategy = equiseq::subcadence::Strategy::Pairs};
  for (auto _ : state) {
    benchmark::DoNotOptimize(equiseq::subcadence::count(text, q));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(SubcadencePairs)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

// Large k favours the split scan: the skip-string runs shorten and the
// per-distance work collapses.
void SubcadenceSplitLargeK(benchmark::State& state) {
  const equiseq::Text text(benchutil::make_text(1 << 16, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        equiseq::subcadence::count_split(text, static_cast<std::uint64_t>(state.range(0))));
  }
}
BENCHMARK(SubcadenceSplitLargeK)->RangeMultiplier(4)->Range(16, 1024);

void SubcadenceAuto(benchmark::State& state) {
  const equiseq::Text text(benchutil::make_text(state.range(0), 2));
  const equiseq::subcadence::Query q{.k = 4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(equiseq::subcadence::count(text, q));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(SubcadenceAuto)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

}  // namespace
