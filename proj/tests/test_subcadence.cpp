#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "equiseq/oracle.hpp"
#include "equiseq/subcadence.hpp"
#include "printers.hpp"
#include "testutil.hpp"

using namespace equiseq;
namespace sc = equiseq::subcadence;

namespace {

const char* kSample = "caaacaabaabaabcabc";

std::vector<Occurrence> locate_with(const Text& t, std::uint64_t k,
                                    sc::Strategy s, std::uint64_t d = 0,
                                    unsigned threads = 1) {
  sc::Query q;
  q.k = k;
  q.strategy = s;
  q.d_filter = d;
  q.threads = threads;
  return sc::locate(t, q);
}

std::uint64_t count_with(const Text& t, std::uint64_t k, sc::Strategy s,
                         std::uint64_t d = 0, unsigned threads = 1) {
  sc::Query q;
  q.k = k;
  q.strategy = s;
  q.d_filter = d;
  q.threads = threads;
  return sc::count(t, q);
}

}  // namespace

TEST_CASE("reference example at distance 3") {
  const Text t(kSample);
  const std::vector<Occurrence> want{{3, 3}, {4, 3}, {7, 3}, {8, 3}};
  CHECK(sc::locate_split(t, 4, 3) == want);
  CHECK(sc::locate_bitpar(t, 4, 3) == want);
  CHECK(sc::locate_pairs(t, 4, 3) == want);
  CHECK(oracle::brute_subcadences(t, 4, 3) == want);
  CHECK(sc::count_split(t, 4, 3) == 4);
  CHECK(sc::count_bitpar(t, 4, 3) == 4);
}

TEST_CASE("reference example per character") {
  const Text t(kSample);
  CHECK(sc::count_pairs(t, 4, 'a') == 3);
  CHECK(sc::count_pairs(t, 4, 'b') == 1);
  CHECK(sc::count_pairs(t, 4, 'c') == 0);
  CHECK(sc::count_pairs(t, 4, 'a', 3) == 3);
}

TEST_CASE("tiny hand-enumerated texts") {
  CHECK(sc::count_split(Text("aaaa"), 2) == 6);
  CHECK(sc::count_bitpar(Text("aaaa"), 2) == 6);
  CHECK(sc::locate_split(Text("aaaa"), 3) ==
        std::vector<Occurrence>{{1, 1}, {2, 1}});
  CHECK(sc::locate_split(Text("abab"), 2) ==
        std::vector<Occurrence>{{1, 2}, {2, 2}});
  CHECK(sc::count_pairs(Text("abab"), 2, 'a') == 1);
  CHECK(sc::locate_split(Text("aa"), 2) == std::vector<Occurrence>{{1, 1}});
}

TEST_CASE("degenerate inputs") {
  CHECK(sc::count_split(Text(""), 2) == 0);
  CHECK(sc::count_bitpar(Text(""), 2) == 0);
  CHECK(sc::count_split(Text("a"), 2) == 0);
  CHECK(sc::count_split(Text("abc"), 5) == 0);
  CHECK(sc::locate_bitpar(Text("abc"), 5).empty());
  CHECK_THROWS_AS(sc::count_split(Text("aaaa"), 1), UnsupportedLength);
  CHECK_THROWS_AS(sc::count_bitpar(Text("aaaa"), 0), UnsupportedLength);
}

TEST_CASE("no character repeats means no structures") {
  const Text t("abcdefgh");
  for (std::uint64_t k = 2; k <= 5; ++k) {
    CHECK(sc::count_split(t, k) == 0);
    CHECK(sc::count_bitpar(t, k) == 0);
  }
}

TEST_CASE("unary text closed form") {
  for (std::uint64_t n : {10, 31, 64}) {
    const Text t(std::string(n, 'a'));
    for (std::uint64_t k = 2; k <= 6; ++k) {
      std::uint64_t want = 0;
      for (std::uint64_t d = 1; d <= d_max(n, k); ++d) want += n - (k - 1) * d;
      CAPTURE(n);
      CAPTURE(k);
      CHECK(sc::count_split(t, k) == want);
      CHECK(sc::count_bitpar(t, k) == want);
    }
  }
}

TEST_CASE("all engines agree with the oracle on random texts") {
  std::mt19937_64 rng(101);
  for (int round = 0; round < 40; ++round) {
    const std::uint64_t n = 1 + rng() % 128;
    const unsigned sigma = 1 + rng() % 4;
    const Text t(testutil::random_text(rng, n, sigma));
    const std::uint64_t k = 2 + rng() % 6;
    const auto want = oracle::brute_subcadences(t, k);
    CAPTURE(t.bytes());
    CAPTURE(k);
    CHECK(sc::locate_split(t, k) == want);
    CHECK(sc::locate_bitpar(t, k) == want);
    CHECK(sc::locate_pairs(t, k) == want);
    CHECK(sc::count_split(t, k) == want.size());
    CHECK(sc::count_bitpar(t, k) == want.size());
  }
}

TEST_CASE("distance filter slices the full answer") {
  std::mt19937_64 rng(103);
  for (int round = 0; round < 15; ++round) {
    const Text t(testutil::random_text(rng, 60 + rng() % 60, 2));
    const std::uint64_t k = 2 + rng() % 4;
    const std::uint64_t d = 1 + rng() % d_max(t.size(), k);
    std::vector<Occurrence> want;
    for (const auto& occ : oracle::brute_subcadences(t, k))
      if (occ.d == d) want.push_back(occ);
    CAPTURE(t.bytes());
    CAPTURE(k);
    CAPTURE(d);
    CHECK(sc::locate_split(t, k, d) == want);
    CHECK(sc::locate_bitpar(t, k, d) == want);
    CHECK(sc::locate_pairs(t, k, d) == want);
  }
}

TEST_CASE("dispatcher strategies are interchangeable") {
  std::mt19937_64 rng(107);
  const sc::Strategy all[] = {sc::Strategy::Auto, sc::Strategy::Split,
                              sc::Strategy::BitParallel, sc::Strategy::Pairs};
  for (int round = 0; round < 20; ++round) {
    const Text t(testutil::random_text(rng, 1 + rng() % 200, 1 + rng() % 3));
    const std::uint64_t k = 2 + rng() % 7;
    const auto want = oracle::brute_subcadences(t, k);
    for (sc::Strategy s : all) {
      CAPTURE(t.bytes());
      CAPTURE(k);
      CHECK(locate_with(t, k, s) == want);
      CHECK(count_with(t, k, s) == want.size());
    }
  }
}

TEST_CASE("worker threads do not change the answer") {
  std::mt19937_64 rng(109);
  const Text t(testutil::random_text(rng, 500, 2));
  for (std::uint64_t k : {2, 3, 5}) {
    const auto one = locate_with(t, k, sc::Strategy::BitParallel, 0, 1);
    for (unsigned threads : {2u, 3u, 8u}) {
      CHECK(locate_with(t, k, sc::Strategy::BitParallel, 0, threads) == one);
      CHECK(count_with(t, k, sc::Strategy::BitParallel, 0, threads) ==
            one.size());
    }
  }
}

TEST_CASE("auto dispatch reports the engine it used") {
  std::mt19937_64 rng(113);
  const Text t(testutil::random_text(rng, 256, 2));
  sc::Query q;
  q.k = 3;
  std::string resolved;
  const auto n = sc::count(t, q, &resolved);
  CHECK(n == oracle::brute_subcadences(t, 3).size());
  CHECK(resolved != "");
  CHECK(resolved != "auto");

  q.strategy = sc::Strategy::Split;
  sc::count(t, q, &resolved);
  CHECK(resolved == "split");
  q.strategy = sc::Strategy::BitParallel;
  sc::count(t, q, &resolved);
  CHECK(resolved == "bitpar");
  q.strategy = sc::Strategy::Pairs;
  sc::count(t, q, &resolved);
  CHECK(resolved == "pairs");
}

TEST_CASE("every reported occurrence satisfies the definition") {
  std::mt19937_64 rng(127);
  for (int round = 0; round < 10; ++round) {
    const Text t(testutil::random_text(rng, 80 + rng() % 80, 2));
    const std::uint64_t k = 2 + rng() % 5;
    for (const auto& occ : sc::locate_split(t, k)) {
      REQUIRE(occ.i >= 1);
      REQUIRE(occ.d >= 1);
      REQUIRE(occ.i + (k - 1) * occ.d <= t.size());
      for (std::uint64_t j = 1; j < k; ++j)
        REQUIRE(t.at(occ.i + j * occ.d) == t.at(occ.i));
    }
  }
}
