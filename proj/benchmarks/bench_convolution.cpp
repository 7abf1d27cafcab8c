#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "bench_util.hpp"
#include "equiseq/convolution.hpp"
#include "equiseq/length3.hpp"
#include "equiseq/oracle.hpp"
#include "equiseq/text.hpp"

namespace {

equiseq::convolution::IntSeq make_indicator(std::int64_t n) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(n) * 77 + 5);
  equiseq::convolution::IntSeq a(static_cast<std::size_t>(n));
  for (auto& v : a) v = rng() & 1;
  return a;
}

void ConvolveAcyclic(benchmark::State& state) {
  const auto a = make_indicator(state.range(0));
  const auto b = make_indicator(state.range(0) + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(equiseq::convolution::acyclic_convolve(a, b));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(ConvolveAcyclic)->RangeMultiplier(4)->Range(1 << 8, 1 << 18)->Complexity();

void ConvolveTriangle(benchmark::State& state) {
  const auto a = make_indicator(state.range(0));
  const auto b = make_indicator(state.range(0) + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(equiseq::convolution::triangle_convolve(a, b));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(ConvolveTriangle)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Complexity();

void ConvolveSchoolbook(benchmark::State& state) {
  const auto a = make_indicator(state.range(0));
  const auto b = make_indicator(state.range(0) + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        equiseq::oracle::brute_convolve(a, b, equiseq::oracle::Region::Full));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(ConvolveSchoolbook)->RangeMultiplier(4)->Range(1 << 8, 1 << 12)->Complexity();

void Length3Esp(benchmark::State& state) {
  const equiseq::Text text(benchutil::make_text(state.range(0), 3));
  const equiseq::Pattern pattern("abc");
  for (auto _ : state) {
    benchmark::DoNotOptimize(equiseq::length3::count_esp3(text, pattern));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(Length3Esp)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

void Length3Abelian(benchmark::State& state) {
  const equiseq::Text text(benchutil::make_text(state.range(0), 3));
  const equiseq::Pattern pattern("abc");
  for (auto _ : state) {
    benchmark::DoNotOptimize(equiseq::length3::count_abelian3(text, pattern));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(Length3Abelian)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

}  // namespace
