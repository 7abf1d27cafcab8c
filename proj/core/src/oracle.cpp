#include "equiseq/oracle.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "equiseq/errors.hpp"
#include "equiseq/packed_bits.hpp"

namespace equiseq::oracle {
namespace {

std::pair<std::uint64_t, std::uint64_t> d_bounds(std::uint64_t dmax,
                                                 std::uint64_t d_filter) {
  if (d_filter == 0) return {1, dmax};
  if (d_filter <= dmax) return {d_filter, d_filter};
  return {1, 0};
}

}  // namespace

std::vector<Occurrence> brute_subcadences(const Text& text, std::uint64_t k,
                                          std::uint64_t d_filter) {
  const std::uint64_t n = text.size();
  const auto [dlo, dhi] = d_bounds(d_max(n, k), d_filter);
  std::vector<Occurrence> out;
  for (std::uint64_t d = dlo; d <= dhi; ++d) {
    for (std::uint64_t i = 1; i + (k - 1) * d <= n; ++i) {
      bool all_equal = true;
      for (std::uint64_t j = 1; j < k && all_equal; ++j)
        all_equal = text.at(i + j * d) == text.at(i);
      if (all_equal) out.push_back({i, d});
    }
  }
  return out;
}

std::vector<Occurrence> brute_cadences(const Text& text, std::uint64_t k,
                                       std::uint64_t d_filter) {
  const std::uint64_t n = text.size();
  std::vector<Occurrence> out;
  for (const Occurrence& o : brute_subcadences(text, k, d_filter))
    if (o.i <= o.d && o.i + k * o.d > n) out.push_back(o);
  return out;
}

std::vector<Occurrence> brute_esp(const Text& text, const Pattern& p,
                                  std::uint64_t d_filter) {
  if (p.size() < 2)
    throw UnsupportedLength("pattern length m must be at least 2");
  const std::uint64_t n = text.size();
  const std::uint64_t m = p.size();
  const auto [dlo, dhi] = d_bounds(d_max(n, m), d_filter);
  std::vector<Occurrence> out;
  for (std::uint64_t d = dlo; d <= dhi; ++d) {
    for (std::uint64_t i = 1; i + (m - 1) * d <= n; ++i) {
      bool match = true;
      for (std::uint64_t j = 0; j < m && match; ++j)
        match = text.at(i + j * d) == p.at(j + 1);
      if (match) out.push_back({i, d});
    }
  }
  return out;
}

std::vector<Occurrence> brute_abelian3(const Text& text, const Pattern& p,
                                       std::uint64_t d_filter) {
  if (p.size() != 3)
    throw UnsupportedLength("abelian counting needs a length-3 pattern");
  const std::uint64_t n = text.size();
  std::array<unsigned char, 3> want{p.at(1), p.at(2), p.at(3)};
  std::sort(want.begin(), want.end());
  const auto [dlo, dhi] = d_bounds(d_max(n, 3), d_filter);
  std::vector<Occurrence> out;
  for (std::uint64_t d = dlo; d <= dhi; ++d) {
    for (std::uint64_t i = 1; i + 2 * d <= n; ++i) {
      std::array<unsigned char, 3> got{text.at(i), text.at(i + d),
                                       text.at(i + 2 * d)};
      std::sort(got.begin(), got.end());
      if (got == want) out.push_back({i, d});
    }
  }
  return out;
}

convolution::ConvSeq brute_convolve(const convolution::IntSeq& a,
                                    const convolution::IntSeq& b,
                                    Region region) {
  const std::size_t len = std::max(a.size(), b.size());
  if (len == 0) return {};
  convolution::ConvSeq c(2 * len - 1, 0);
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y)
      if (region == Region::Full || x < y) c[x + y] += a[x] * b[y];
  return c;
}

std::uint64_t masked_cadence_count(const Text& text, std::uint64_t k,
                                   std::uint64_t d_filter) {
  const std::uint64_t n = text.size();
  const auto [dlo, dhi] = d_bounds(d_max(n, k), d_filter);
  std::uint64_t total = 0;
  for (unsigned char c : text.distinct_chars()) {
    const PackedBits delta = indicator(text, c).bits;
    for (std::uint64_t d = dlo; d <= dhi; ++d) {
      PackedBits q = delta;
      for (std::uint64_t j = 1; j < k; ++j) q.and_shift_low(delta, j * d);
      PackedBits window(n);  // admissible starts: n - kd < i <= d
      const std::uint64_t lo = n >= k * d ? n - k * d + 1 : 1;
      for (std::uint64_t i = lo; i <= d && i <= n; ++i) window.set(i);
      q &= window;
      total += q.popcount();
    }
  }
  return total;
}

}  // namespace equiseq::oracle
