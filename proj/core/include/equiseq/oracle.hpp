#pragma once

#include <cstdint>
#include <vector>

#include "equiseq/convolution.hpp"
#include "equiseq/text.hpp"

namespace equiseq::oracle {

// Reference implementations that transcribe the definitions literally,
// sharing no code with the fast engines they are used to check. Meant
// for tests and desk-scale inputs only; every one of them is at least
// quadratic.

std::vector<Occurrence> brute_subcadences(const Text& text, std::uint64_t k,
                                          std::uint64_t d_filter = 0);
std::vector<Occurrence> brute_cadences(const Text& text, std::uint64_t k,
                                       std::uint64_t d_filter = 0);
std::vector<Occurrence> brute_esp(const Text& text, const Pattern& p,
                                  std::uint64_t d_filter = 0);
// Pattern must have length 3; occurrences match it up to reordering.
std::vector<Occurrence> brute_abelian3(const Text& text, const Pattern& p,
                                       std::uint64_t d_filter = 0);

enum class Region { Full, XLessThanY };
convolution::ConvSeq brute_convolve(const convolution::IntSeq& a,
                                    const convolution::IntSeq& b,
                                    Region region);

// Cadence counting the pre-window way: the full-length shifted-AND vector
// for every distance, masked afterwards to the admissible start window.
// Exists so the windowed engine has something honest to be compared
// against, in tests and in the benchmarks.
std::uint64_t masked_cadence_count(const Text& text, std::uint64_t k,
                                   std::uint64_t d_filter = 0);

}  // namespace equiseq::oracle
