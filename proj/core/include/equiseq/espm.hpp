#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "equiseq/text.hpp"
#include "equiseq/tuning.hpp"

namespace equiseq::espm {

// An occurrence of pattern P as an equidistant subsequence is an (i, d)
// with P = T[i] T[i+d] ... T[i+(m-1)d]. Engines:
//
//   Split        exact string matching over every d-skip string, one
//                residue at a time; O(n^2/m) overall
//   BitParallel  AND the per-position character indicators shifted by
//                0, d, ..., (m-1)d; O(n^2 m / w) overall
enum class Strategy { Auto, Split, BitParallel };

struct Options {
  Strategy strategy = Strategy::Auto;
  std::uint64_t d_filter = 0;
  Tuning tuning{};
  unsigned threads = 1;
};

// 1-based start positions of every (possibly overlapping) occurrence of
// the pattern as a contiguous substring of `haystack`.
std::vector<std::uint64_t> kmp_search(std::string_view haystack,
                                      const Pattern& needle);

std::vector<Occurrence> locate_split(const Text& text, const Pattern& p,
                                     std::uint64_t d_filter = 0);
std::uint64_t count_split(const Text& text, const Pattern& p,
                          std::uint64_t d_filter = 0);

std::uint64_t count_bitpar(const Text& text, const Pattern& p,
                           std::uint64_t d_filter = 0, unsigned threads = 1);
std::vector<Occurrence> locate_bitpar(const Text& text, const Pattern& p,
                                      std::uint64_t d_filter = 0,
                                      unsigned threads = 1);

std::uint64_t count(const Text& text, const Pattern& p,
                    const Options& opt = {}, std::string* resolved = nullptr);
std::vector<Occurrence> locate(const Text& text, const Pattern& p,
                               const Options& opt = {},
                               std::string* resolved = nullptr);

}  // namespace equiseq::espm
