#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equiseq/text.hpp"
#include "equiseq/tuning.hpp"

namespace equiseq::cadence {

// A k-cadence is a k-sub-cadence that also brushes both ends of the text:
// i <= d (nothing of the pattern fits before the start) and i + kd > n
// (nothing fits after the end). Those two constraints confine starts to a
// window of positions per distance, which is what the windowed engine
// exploits; the filter engine just sieves the full sub-cadence scan.
enum class Strategy { Auto, Filter, WindowedBitParallel };

struct Query {
  std::uint64_t k = 0;
  Strategy strategy = Strategy::Auto;
  std::uint64_t d_filter = 0;
  Tuning tuning{};
  unsigned threads = 1;
};

// End constraints alone; (i, d) must already be a k-sub-cadence.
inline bool is_cadence(const Occurrence& occ, std::uint64_t n,
                       std::uint64_t k) {
  return occ.i <= occ.d && occ.i + k * occ.d > n;
}

std::vector<Occurrence> locate_filter(const Text& text, std::uint64_t k,
                                      std::uint64_t d_filter = 0);
std::uint64_t count_filter(const Text& text, std::uint64_t k,
                           std::uint64_t d_filter = 0);

std::uint64_t count_windowed(const Text& text, std::uint64_t k,
                             std::uint64_t d_filter = 0, unsigned threads = 1);
std::vector<Occurrence> locate_windowed(const Text& text, std::uint64_t k,
                                        std::uint64_t d_filter = 0,
                                        unsigned threads = 1);

std::uint64_t count(const Text& text, const Query& q,
                    std::string* resolved = nullptr);
std::vector<Occurrence> locate(const Text& text, const Query& q,
                               std::string* resolved = nullptr);

}  // namespace equiseq::cadence
