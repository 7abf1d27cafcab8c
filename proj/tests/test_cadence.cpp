#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "equiseq/cadence.hpp"
#include "equiseq/oracle.hpp"
#include "printers.hpp"
#include "testutil.hpp"

using namespace equiseq;
namespace cd = equiseq::cadence;

namespace {

std::vector<Occurrence> locate_with(const Text& t, std::uint64_t k,
                                    cd::Strategy s, std::uint64_t d = 0,
                                    unsigned threads = 1) {
  cd::Query q;
  q.k = k;
  q.strategy = s;
  q.d_filter = d;
  q.threads = threads;
  return cd::locate(t, q);
}

}  // namespace

TEST_CASE("end constraints") {
  CHECK(cd::is_cadence({1, 2}, 4, 2));
  CHECK(cd::is_cadence({2, 2}, 4, 2));
  CHECK_FALSE(cd::is_cadence({3, 1}, 4, 2));
  CHECK_FALSE(cd::is_cadence({1, 1}, 4, 2));
}

TEST_CASE("tiny hand-enumerated texts") {
  CHECK(cd::locate_filter(Text("aaaa"), 2) ==
        std::vector<Occurrence>{{1, 2}, {2, 2}, {1, 3}});
  CHECK(cd::locate_windowed(Text("aaaa"), 2) ==
        std::vector<Occurrence>{{1, 2}, {2, 2}, {1, 3}});
  CHECK(cd::count_filter(Text("aaaa"), 2) == 3);
  CHECK(cd::locate_filter(Text("aaa"), 2) == std::vector<Occurrence>{{1, 2}});
  CHECK(cd::locate_filter(Text("abab"), 2) ==
        std::vector<Occurrence>{{1, 2}, {2, 2}});
  CHECK(cd::locate_windowed(Text("abab"), 2) ==
        std::vector<Occurrence>{{1, 2}, {2, 2}});
}

TEST_CASE("degenerate inputs") {
  CHECK(cd::count_filter(Text(""), 3) == 0);
  CHECK(cd::count_windowed(Text(""), 3) == 0);
  CHECK(cd::count_filter(Text("a"), 2) == 0);
  CHECK(cd::count_windowed(Text("abc"), 7) == 0);
  CHECK_THROWS_AS(cd::count_filter(Text("aaaa"), 1), UnsupportedLength);
  CHECK_THROWS_AS(cd::count_windowed(Text("aaaa"), 0), UnsupportedLength);
}

TEST_CASE("every cadence is a sub-cadence that brushes both ends") {
  std::mt19937_64 rng(211);
  for (int round = 0; round < 10; ++round) {
    const Text t(testutil::random_text(rng, 50 + rng() % 100, 2));
    const std::uint64_t k = 2 + rng() % 5;
    const std::uint64_t n = t.size();
    for (const auto& occ : cd::locate_windowed(t, k)) {
      REQUIRE(occ.i <= occ.d);
      REQUIRE(occ.i + k * occ.d > n);
      REQUIRE(occ.i + (k - 1) * occ.d <= n);
      for (std::uint64_t j = 1; j < k; ++j)
        REQUIRE(t.at(occ.i + j * occ.d) == t.at(occ.i));
    }
  }
}

TEST_CASE("filter and windowed engines agree with the oracle") {
  std::mt19937_64 rng(223);
  for (int round = 0; round < 40; ++round) {
    const std::uint64_t n = 1 + rng() % 150;
    const Text t(testutil::random_text(rng, n, 1 + rng() % 4));
    const std::uint64_t k = 2 + rng() % 7;
    const auto want = oracle::brute_cadences(t, k);
    CAPTURE(t.bytes());
    CAPTURE(k);
    CHECK(cd::locate_filter(t, k) == want);
    CHECK(cd::locate_windowed(t, k) == want);
    CHECK(cd::count_filter(t, k) == want.size());
    CHECK(cd::count_windowed(t, k) == want.size());
    CHECK(oracle::masked_cadence_count(t, k) == want.size());
  }
}

TEST_CASE("distance filter slices the full answer") {
  std::mt19937_64 rng(227);
  for (int round = 0; round < 15; ++round) {
    const Text t(testutil::random_text(rng, 40 + rng() % 80, 2));
    const std::uint64_t k = 2 + rng() % 4;
    const std::uint64_t d = 1 + rng() % d_max(t.size(), k);
    std::vector<Occurrence> want;
    for (const auto& occ : oracle::brute_cadences(t, k))
      if (occ.d == d) want.push_back(occ);
    CAPTURE(t.bytes());
    CAPTURE(k);
    CAPTURE(d);
    CHECK(cd::locate_filter(t, k, d) == want);
    CHECK(cd::locate_windowed(t, k, d) == want);
    CHECK(oracle::masked_cadence_count(t, k, d) == want.size());
  }
}

TEST_CASE("dispatcher strategies are interchangeable and reported") {
  std::mt19937_64 rng(229);
  const cd::Strategy all[] = {cd::Strategy::Auto, cd::Strategy::Filter,
                              cd::Strategy::WindowedBitParallel};
  for (int round = 0; round < 15; ++round) {
    const Text t(testutil::random_text(rng, 1 + rng() % 120, 1 + rng() % 3));
    const std::uint64_t k = 2 + rng() % 6;
    const auto want = oracle::brute_cadences(t, k);
    for (cd::Strategy s : all) {
      CAPTURE(t.bytes());
      CAPTURE(k);
      CHECK(locate_with(t, k, s) == want);
    }
  }

  const Text t("aaaaaaaaaaaaaaaa");
  cd::Query q;
  q.k = 2;
  std::string resolved;
  cd::count(t, q, &resolved);
  CHECK((resolved == "split" || resolved == "window" ||
         resolved == "pairs+window"));
  q.strategy = cd::Strategy::Filter;
  cd::count(t, q, &resolved);
  CHECK(resolved == "split");
  q.strategy = cd::Strategy::WindowedBitParallel;
  cd::count(t, q, &resolved);
  CHECK(resolved == "window");
}

TEST_CASE("worker threads do not change the answer") {
  std::mt19937_64 rng(233);
  const Text t(testutil::random_text(rng, 400, 2));
  for (std::uint64_t k : {2, 3, 7}) {
    const auto one = locate_with(t, k, cd::Strategy::WindowedBitParallel);
    for (unsigned threads : {2u, 5u}) {
      CHECK(locate_with(t, k, cd::Strategy::WindowedBitParallel, 0, threads) ==
            one);
    }
  }
}
