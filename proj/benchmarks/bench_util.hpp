#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace benchutil {

// Deterministic per-shape text so repeated runs measure the same input.
inline std::string make_text(std::uint64_t n, unsigned sigma) {
  std::mt19937_64 rng(n * 1000003 + sigma);
  std::uniform_int_distribution<unsigned> pick(0, sigma - 1);
  std::string s(n, 'a');
  for (auto& ch : s) ch = static_cast<char>('a' + pick(rng));
  return s;
}

}  // namespace benchutil
