#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>

#include "bench_util.hpp"
#include "equiseq/espm.hpp"
#include "equiseq/text.hpp"

namespace {

std::string make_pattern(std::int64_t m) {
  std::string p;
  for (std::int64_t j = 0; j < m; ++j) p += static_cast<char>('a' + (j & 1));
  return p;
}

void EspmSplit(benchmark::State& state) {
  const equiseq::Text text(benchutil::make_text(state.range(0), 2));
  const equiseq::Pattern pattern(make_pattern(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(equiseq::espm::count_split(text, pattern));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(EspmSplit)
    ->ArgsProduct({benchmark::CreateRange(1 << 10, 1 << 16, 4), {4, 16}})
    ->Complexity();

void EspmBitParallel(benchmark::State& state) {
  const equiseq::Text text(benchutil::make_text(state.range(0), 2));
  const equiseq::Pattern pattern(make_pattern(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(equiseq::espm::count_bitpar(text, pattern));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(EspmBitParallel)
    ->ArgsProduct({benchmark::CreateRange(1 << 10, 1 << 16, 4), {4, 16}})
    ->Complexity();

}  // namespace
