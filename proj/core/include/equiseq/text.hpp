#pragma once

#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "equiseq/errors.hpp"
#include "equiseq/packed_bits.hpp"

namespace equiseq {

// Immutable byte string with 1-based positions T[1..n]. Construction also
// tallies a byte histogram so strategy selection can read |N_c| in O(1).
class Text {
 public:
  Text() = default;
  explicit Text(std::string bytes) : bytes_(std::move(bytes)) {
    for (char ch : bytes_) ++freq_[static_cast<unsigned char>(ch)];
  }

  std::uint64_t size() const { return bytes_.size(); }

  unsigned char at(std::uint64_t pos) const {
    assert(pos >= 1 && pos <= bytes_.size());
    return static_cast<unsigned char>(bytes_[pos - 1]);
  }

  std::string_view bytes() const { return bytes_; }

  // |N_c|: how often byte c occurs.
  std::uint64_t count_of(unsigned char c) const { return freq_[c]; }

  // Distinct bytes present, in ascending byte value.
  std::vector<unsigned char> distinct_chars() const;

 private:
  std::string bytes_;
  std::array<std::uint64_t, 256> freq_{};
};

// bits[i] == 1 iff T[i] == c.
struct CharIndicator {
  unsigned char c = 0;
  PackedBits bits;
};

// Positions of c in T, strictly increasing.
struct PositionList {
  unsigned char c = 0;
  std::vector<std::uint64_t> positions;
};

// A start position i paired with a common distance d. Ordered by (d, i),
// the canonical order of every locate result in this library.
struct Occurrence {
  std::uint64_t i = 0;
  std::uint64_t d = 0;

  friend constexpr bool operator==(const Occurrence&, const Occurrence&) = default;
  friend constexpr std::strong_ordering operator<=>(const Occurrence& a,
                                                    const Occurrence& b) {
    if (auto c = a.d <=> b.d; c != 0) return c;
    return a.i <=> b.i;
  }

  friend std::ostream& operator<<(std::ostream& os, const Occurrence& occ) {
    return os << "(" << occ.i << "," << occ.d << ")";
  }
};

// Pattern to match as an equidistant subsequence, positions P[1..m].
class Pattern {
 public:
  explicit Pattern(std::string chars);

  std::uint64_t size() const { return chars_.size(); }

  unsigned char at(std::uint64_t pos) const {
    assert(pos >= 1 && pos <= chars_.size());
    return static_cast<unsigned char>(chars_[pos - 1]);
  }

  std::string_view chars() const { return chars_; }

  // Distinct bytes of the pattern, ascending.
  const std::vector<unsigned char>& alphabet() const { return alphabet_; }

 private:
  std::string chars_;
  std::vector<unsigned char> alphabet_;
};

// View of T[r], T[r+d], T[r+2d], ... for one residue 1 <= r <= d. Runs of
// one character in it are k-sub-cadences at distance d; substring matches
// are equidistant pattern occurrences.
struct SkipString {
  const Text* text = nullptr;
  std::uint64_t r = 0;
  std::uint64_t d = 0;

  std::uint64_t size() const {
    const std::uint64_t n = text->size();
    return r > n ? 0 : (n - r) / d + 1;
  }

  std::uint64_t text_position(std::uint64_t j) const { return r + (j - 1) * d; }

  unsigned char at(std::uint64_t j) const { return text->at(text_position(j)); }
};

CharIndicator indicator(const Text& text, unsigned char c);
PositionList positions(const Text& text, unsigned char c);

// Largest distance usable by a length-k equidistant structure in a text of
// length n: floor((n-1)/(k-1)), or 0 when n <= 1. Lengths below 2 have no
// distance at all and are rejected.
std::uint64_t d_max(std::uint64_t n, std::uint64_t k);

}  // namespace equiseq
