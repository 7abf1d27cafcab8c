#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "equiseq/errors.hpp"
#include "equiseq/packed_bits.hpp"

using equiseq::PackedBits;

namespace {

PackedBits random_bits(std::mt19937_64& rng, std::uint64_t len, double density) {
  PackedBits v(len);
  std::bernoulli_distribution coin(density);
  for (std::uint64_t p = 1; p <= len; ++p)
    if (coin(rng)) v.set(p);
  return v;
}

bool bit_or_zero(const PackedBits& v, std::uint64_t pos) {
  return pos >= 1 && pos <= v.size() && v.test(pos);
}

}  // namespace

TEST_CASE("set, test and reset round-trip") {
  PackedBits v(130);
  CHECK(v.size() == 130);
  CHECK(v.popcount() == 0);
  v.set(1);
  v.set(64);
  v.set(65);
  v.set(130);
  CHECK(v.test(1));
  CHECK(v.test(64));
  CHECK(v.test(65));
  CHECK(v.test(130));
  CHECK_FALSE(v.test(2));
  CHECK(v.popcount() == 4);
  v.reset(64);
  CHECK_FALSE(v.test(64));
  CHECK(v.popcount() == 3);
}

TEST_CASE("words_for rounds up to whole words") {
  CHECK(PackedBits::words_for(0) == 0);
  CHECK(PackedBits::words_for(1) == 1);
  CHECK(PackedBits::words_for(64) == 1);
  CHECK(PackedBits::words_for(65) == 2);
  CHECK(PackedBits::words_for(128) == 2);
}

TEST_CASE("word_at matches a bit-by-bit read at any offset") {
  std::mt19937_64 rng(7);
  const PackedBits v = random_bits(rng, 200, 0.4);
  for (std::uint64_t pos = 1; pos <= 210; ++pos) {
    std::uint64_t want = 0;
    for (unsigned b = 0; b < 64; ++b)
      if (bit_or_zero(v, pos + b)) want |= std::uint64_t{1} << b;
    CAPTURE(pos);
    CHECK(v.word_at(pos) == want);
  }
}

TEST_CASE("shift_low moves bits toward position 1 and pads with zeros") {
  std::mt19937_64 rng(11);
  const PackedBits v = random_bits(rng, 150, 0.5);
  for (std::uint64_t s : {std::uint64_t{0}, std::uint64_t{1}, std::uint64_t{63},
                          std::uint64_t{64}, std::uint64_t{65},
                          std::uint64_t{149}, std::uint64_t{150},
                          std::uint64_t{400}}) {
    const PackedBits shifted = v.shift_low(s);
    REQUIRE(shifted.size() == v.size());
    for (std::uint64_t p = 1; p <= v.size(); ++p) {
      CAPTURE(s);
      CAPTURE(p);
      CHECK(shifted.test(p) == bit_or_zero(v, p + s));
    }
  }
}

TEST_CASE("extract copies a slice and rejects bad bounds") {
  std::mt19937_64 rng(13);
  const PackedBits v = random_bits(rng, 100, 0.5);

  const PackedBits mid = v.extract(30, 95);
  REQUIRE(mid.size() == 66);
  for (std::uint64_t p = 1; p <= mid.size(); ++p)
    CHECK(mid.test(p) == v.test(29 + p));

  CHECK(v.extract(42, 41).empty());
  CHECK(v.extract(1, 100).popcount() == v.popcount());
  CHECK_THROWS_AS(v.extract(0, 10), equiseq::RangeError);
  CHECK_THROWS_AS(v.extract(1, 101), equiseq::RangeError);
}

TEST_CASE("bitwise AND requires equal lengths") {
  PackedBits a(10);
  PackedBits b(11);
  CHECK_THROWS_AS(a &= b, equiseq::LengthMismatch);
  CHECK_THROWS_AS(a.and_shift_low(b, 1), equiseq::LengthMismatch);
}

TEST_CASE("and_shift_low equals the two-step shift and AND") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 20; ++round) {
    const std::uint64_t len = 1 + rng() % 300;
    const PackedBits a = random_bits(rng, len, 0.5);
    const PackedBits b = random_bits(rng, len, 0.5);
    const std::uint64_t s = rng() % (len + 10);
    PackedBits fused = a;
    fused.and_shift_low(b, s);
    const PackedBits twostep = a & b.shift_low(s);
    CAPTURE(len);
    CAPTURE(s);
    CHECK(fused == twostep);
  }
}

TEST_CASE("for_each_set_bit visits exactly the set positions in order") {
  std::mt19937_64 rng(19);
  const PackedBits v = random_bits(rng, 500, 0.1);
  std::vector<std::uint64_t> want;
  for (std::uint64_t p = 1; p <= v.size(); ++p)
    if (v.test(p)) want.push_back(p);
  CHECK(v.set_positions() == want);
  CHECK(v.popcount() == want.size());
}

TEST_CASE("shifted reads never resurrect bits past the end") {
  PackedBits v(70);
  for (std::uint64_t p = 1; p <= 70; ++p) v.set(p);
  const PackedBits shifted = v.shift_low(6);
  CHECK(shifted.popcount() == 64);
  CHECK(v.word_at(65) == 0x3f);
  CHECK(v.word_at(71) == 0);
}
