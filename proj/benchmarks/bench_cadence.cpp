#include <benchmark/benchmark.h>

#include <cmath>
#include <cstdint>

#include "bench_util.hpp"
#include "equiseq/cadence.hpp"
#include "equiseq/oracle.hpp"
#include "equiseq/text.hpp"

namespace {

std::uint64_t sqrt_k(std::int64_t n) {
  return static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
}

// Window-restricted scan against the unrestricted scan-then-mask baseline.
// Only distances with (k+1)d > n can host a cadence, so the windowed
// engine touches a vanishing fraction of the (i, d) plane.
void CadenceWindowed(benchmark::State& state) {
  const equiseq::Text text(benchutil::make_text(state.range(0), 2));
  const std::uint64_t k = sqrt_k(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(equiseq::cadence::count_windowed(text, k));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(CadenceWindowed)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity();

void CadenceMaskedBaseline(benchmark::State& state) {
  const equiseq::Text text(benchutil::make_text(state.range(0), 2));
  const std::uint64_t k = sqrt_k(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(equiseq::oracle::masked_cadence_count(text, k));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(CadenceMaskedBaseline)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

void CadenceFilter(benchmark::State& state) {
  const equiseq::Text text(benchutil::make_text(state.range(0), 2));
  const std::uint64_t k = sqrt_k(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(equiseq::cadence::count_filter(text, k));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(CadenceFilter)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

}  // namespace
