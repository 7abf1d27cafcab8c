#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

#include "equiseq/errors.hpp"

namespace equiseq {
namespace detail {

// std::popcount lowers to a libgcc call unless the build enables the
// instruction, which would wreck the per-word loops; fall back to the
// bit-sliced form whenever the instruction is not guaranteed.
inline std::uint64_t popcount64(std::uint64_t x) {
#if defined(__POPCNT__)
  return static_cast<std::uint64_t>(std::popcount(x));
#else
  x -= (x >> 1) & 0x5555555555555555ULL;
  x = (x & 0x3333333333333333ULL) + ((x >> 2) & 0x3333333333333333ULL);
  x = (x + (x >> 4)) & 0x0f0f0f0f0f0f0f0fULL;
  return (x * 0x0101010101010101ULL) >> 56;
#endif
}

}  // namespace detail

// Word-packed bit vector indexed from 1 so bit p mirrors text position p.
// Bit p lives at bit (p-1)%64 of word (p-1)/64; the least significant set
// bit of a word is therefore the smallest position stored in it.
//
// Invariant: storage bits beyond size() are always zero ("tail-clean").
// Reads past the end deliberately return zero, which is what lets the
// shifted-AND kernels treat positions beyond the text as mismatches
// without any boundary branches.
class PackedBits {
 public:
  PackedBits() = default;
  explicit PackedBits(std::uint64_t len) : len_(len), words_(words_for(len)) {}

  std::uint64_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  bool test(std::uint64_t pos) const {
    assert(pos >= 1 && pos <= len_);
    return (words_[(pos - 1) >> 6] >> ((pos - 1) & 63)) & 1u;
  }

  void set(std::uint64_t pos) {
    assert(pos >= 1 && pos <= len_);
    words_[(pos - 1) >> 6] |= std::uint64_t{1} << ((pos - 1) & 63);
  }

  void reset(std::uint64_t pos) {
    assert(pos >= 1 && pos <= len_);
    words_[(pos - 1) >> 6] &= ~(std::uint64_t{1} << ((pos - 1) & 63));
  }

  std::uint64_t popcount() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : words_) total += detail::popcount64(w);
    return total;
  }

  // The 64 bits at positions pos..pos+63, zero-padded past the end.
  // This is the primitive the bit-parallel kernels are built from: an
  // unaligned word read that doubles as an implicit shift by pos-1.
  std::uint64_t word_at(std::uint64_t pos) const {
    assert(pos >= 1);
    const std::uint64_t off = pos - 1;
    const std::uint64_t w = off >> 6;
    const unsigned r = static_cast<unsigned>(off & 63);
    const std::uint64_t lo = w < words_.size() ? words_[w] : 0;
    if (r == 0) return lo;
    const std::uint64_t hi = w + 1 < words_.size() ? words_[w + 1] : 0;
    return (lo >> r) | (hi << (64 - r));
  }

  // result[i] = v[i+s] for i+s <= len, zero otherwise; length preserved.
  PackedBits shift_low(std::uint64_t s) const {
    PackedBits out(len_);
    for (std::uint64_t w = 0; w < out.words_.size(); ++w)
      out.words_[w] = word_at(1 + s + (w << 6));
    out.clear_tail();
    return out;
  }

  // Copy of bits lo..hi as a fresh vector of length hi-lo+1 (empty when
  // lo > hi). Bounds must satisfy 1 <= lo and hi <= size().
  PackedBits extract(std::uint64_t lo, std::uint64_t hi) const {
    if (lo < 1 || hi > len_)
      throw RangeError("extract bounds outside [1, len]");
    if (lo > hi) return PackedBits{};
    PackedBits out(hi - lo + 1);
    for (std::uint64_t w = 0; w < out.words_.size(); ++w)
      out.words_[w] = word_at(lo + (w << 6));
    out.clear_tail();
    return out;
  }

  PackedBits& operator&=(const PackedBits& other) {
    if (len_ != other.len_)
      throw LengthMismatch("bitwise AND on different lengths");
    for (std::uint64_t w = 0; w < words_.size(); ++w)
      words_[w] &= other.words_[w];
    return *this;
  }

  friend PackedBits operator&(PackedBits a, const PackedBits& b) {
    a &= b;
    return a;
  }

  // In-place a &= v.shift_low(s) without materialising the shifted copy.
  void and_shift_low(const PackedBits& v, std::uint64_t s) {
    if (len_ != v.len_)
      throw LengthMismatch("bitwise AND on different lengths");
    for (std::uint64_t w = 0; w < words_.size(); ++w)
      words_[w] &= v.word_at(1 + s + (w << 6));
  }

  // Visits set positions in ascending order.
  template <typename Fn>
  void for_each_set_bit(Fn&& fn) const {
    for (std::uint64_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        fn((w << 6) + static_cast<std::uint64_t>(std::countr_zero(word)) + 1);
        word &= word - 1;
      }
    }
  }

  std::vector<std::uint64_t> set_positions() const {
    std::vector<std::uint64_t> out;
    out.reserve(popcount());
    for_each_set_bit([&](std::uint64_t p) { out.push_back(p); });
    return out;
  }

  bool operator==(const PackedBits&) const = default;

  std::span<const std::uint64_t> words() const { return words_; }

  static std::uint64_t words_for(std::uint64_t bits) { return (bits + 63) >> 6; }

 private:
  void clear_tail() {
    const unsigned used = static_cast<unsigned>(len_ & 63);
    if (used != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << used) - 1;
  }

  std::uint64_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace equiseq
