#pragma once

// Enumeration helpers shared by the subcadence and cadence translation
// units. Private to the library.

#include <cstddef>
#include <cstdint>

#include "equiseq/text.hpp"

namespace equiseq::detail {

struct DRange {
  std::uint64_t lo = 1;
  std::uint64_t hi = 0;  // lo > hi means empty

  bool empty() const { return lo > hi; }
};

inline DRange d_range(std::uint64_t dmax, std::uint64_t d_filter) {
  if (d_filter == 0) return {1, dmax};
  if (d_filter <= dmax) return {d_filter, d_filter};
  return {1, 0};
}

// Every k-sub-cadence with distance in `range`, found by scanning the
// d-skip strings for runs of one character: a run of length L >= k yields
// L-k+1 starts. Emits in ascending d but unsorted within one d (residues
// are scanned one after another).
template <typename Sink>
void for_each_split_subcadence(const Text& text, std::uint64_t k,
                               DRange range, Sink&& sink) {
  const std::uint64_t n = text.size();
  for (std::uint64_t d = range.lo; d <= range.hi; ++d) {
    for (std::uint64_t r = 1; r <= d && r <= n; ++r) {
      const SkipString s{&text, r, d};
      const std::uint64_t len = s.size();
      std::uint64_t run_start = 1;
      unsigned char run_char = s.at(1);
      for (std::uint64_t j = 2; j <= len + 1; ++j) {
        if (j <= len && s.at(j) == run_char) continue;
        if (j - run_start >= k)
          for (std::uint64_t t = run_start; t + k <= j; ++t)
            sink(Occurrence{s.text_position(t), d});
        if (j <= len) {
          run_start = j;
          run_char = s.at(j);
        }
      }
    }
  }
}

// Every k-sub-cadence of character c with distance in `range`, found by
// trying each ordered position pair (i, i+d) and verifying the remaining
// k-2 positions. Unsorted emission.
template <typename Sink>
void for_each_pair_subcadence(const Text& text, std::uint64_t k,
                              unsigned char c, DRange range, Sink&& sink) {
  const std::uint64_t n = text.size();
  const auto pos = positions(text, c).positions;
  for (std::size_t a = 0; a < pos.size(); ++a) {
    const std::uint64_t i = pos[a];
    for (std::size_t b = a + 1; b < pos.size(); ++b) {
      const std::uint64_t d = pos[b] - i;
      if (d > range.hi || i + (k - 1) * d > n) break;
      if (d < range.lo) continue;
      bool ok = true;
      for (std::uint64_t j = 2; j < k && ok; ++j) ok = text.at(i + j * d) == c;
      if (ok) sink(Occurrence{i, d});
    }
  }
}

}  // namespace equiseq::detail
