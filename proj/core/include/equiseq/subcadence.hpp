#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equiseq/text.hpp"
#include "equiseq/tuning.hpp"

namespace equiseq::subcadence {

// A k-sub-cadence is an (i, d) with T[i] = T[i+d] = ... = T[i+(k-1)d],
// i >= 1 and i+(k-1)d <= n. Three interchangeable engines compute them:
//
//   Split        scan each d-skip string for runs of one character;
//                output-friendly, O(n^2/k) regardless of alphabet
//   BitParallel  per character, AND k copies of the indicator shifted by
//                0, d, ..., (k-1)d and read off the surviving positions
//   Pairs        per character, try every position pair (i, i+d) and
//                verify the k-2 remaining positions; wins when the
//                character is rare
enum class Strategy { Auto, Split, BitParallel, Pairs };

struct Query {
  std::uint64_t k = 0;
  Strategy strategy = Strategy::Auto;
  std::uint64_t d_filter = 0;  // 0 = all distances, otherwise exactly d
  Tuning tuning{};
  unsigned threads = 1;
};

std::vector<Occurrence> locate_split(const Text& text, std::uint64_t k,
                                     std::uint64_t d_filter = 0);
std::uint64_t count_split(const Text& text, std::uint64_t k,
                          std::uint64_t d_filter = 0);

std::uint64_t count_bitpar(const Text& text, std::uint64_t k,
                           std::uint64_t d_filter = 0, unsigned threads = 1);
std::vector<Occurrence> locate_bitpar(const Text& text, std::uint64_t k,
                                      std::uint64_t d_filter = 0,
                                      unsigned threads = 1);

// Pair enumeration for a single character.
std::uint64_t count_pairs(const Text& text, std::uint64_t k, unsigned char c,
                          std::uint64_t d_filter = 0);
std::vector<Occurrence> locate_pairs(const Text& text, std::uint64_t k,
                                     std::uint64_t d_filter = 0);

// Dispatchers. Strategy::Auto picks the cheapest engine from k, n and the
// per-character frequencies; the result never depends on the choice. When
// `resolved` is non-null it receives the engine(s) actually used.
std::uint64_t count(const Text& text, const Query& q,
                    std::string* resolved = nullptr);
std::vector<Occurrence> locate(const Text& text, const Query& q,
                               std::string* resolved = nullptr);

}  // namespace equiseq::subcadence
