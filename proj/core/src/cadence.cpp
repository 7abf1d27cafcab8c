#include "equiseq/cadence.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "equiseq/detail/parallel.hpp"
#include "scan_detail.hpp"

namespace equiseq::cadence {
namespace {

using detail::DRange;

// Start positions of k-cadences at distance d are confined to the window
// [max(1, n-kd+1), d], which is non-empty only when (k+1)d > n. The AND
// of the k window-sized slices of delta at offsets 0, d, ..., (k-1)d is
// computed word by word; slice reads past position n return zeros, which
// discards any start whose last position would overshoot the text.
template <typename Emit>  // Emit: (start position)
void windowed_scan_d(const PackedBits& delta, std::uint64_t n,
                     std::uint64_t k, std::uint64_t d, Emit&& emit) {
  if ((k + 1) * d <= n) return;
  const std::uint64_t lo = n >= k * d ? n - k * d + 1 : 1;
  const std::uint64_t hi = d;
  if (lo > hi) return;
  const std::uint64_t width = hi - lo + 1;
  const std::uint64_t nwords = PackedBits::words_for(width);
  for (std::uint64_t w = 0; w < nwords; ++w) {
    const std::uint64_t woff = w << 6;
    std::uint64_t acc = ~std::uint64_t{0};
    for (std::uint64_t j = 0; j < k && acc != 0; ++j)
      acc &= delta.word_at(lo + j * d + woff);
    const std::uint64_t tail = width - woff;
    if (tail < 64) acc &= (std::uint64_t{1} << tail) - 1;
    while (acc != 0) {
      emit(lo + woff + static_cast<std::uint64_t>(std::countr_zero(acc)));
      acc &= acc - 1;
    }
  }
}

// First distance whose window can be non-empty.
std::uint64_t first_window_d(std::uint64_t n, std::uint64_t k) {
  return std::max<std::uint64_t>(1, (n + k) / (k + 1));
}

std::string mixed_label(bool used_pairs, bool used_window) {
  if (used_pairs && used_window) return "pairs+window";
  return used_pairs ? "pairs" : "window";
}

}  // namespace

std::vector<Occurrence> locate_filter(const Text& text, std::uint64_t k,
                                      std::uint64_t d_filter) {
  const std::uint64_t n = text.size();
  const DRange r = detail::d_range(d_max(n, k), d_filter);
  std::vector<Occurrence> out;
  detail::for_each_split_subcadence(text, k, r, [&](Occurrence o) {
    if (is_cadence(o, n, k)) out.push_back(o);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_filter(const Text& text, std::uint64_t k,
                           std::uint64_t d_filter) {
  const std::uint64_t n = text.size();
  const DRange r = detail::d_range(d_max(n, k), d_filter);
  std::uint64_t total = 0;
  detail::for_each_split_subcadence(text, k, r, [&](Occurrence o) {
    if (is_cadence(o, n, k)) ++total;
  });
  return total;
}

std::uint64_t count_windowed(const Text& text, std::uint64_t k,
                             std::uint64_t d_filter, unsigned threads) {
  const std::uint64_t n = text.size();
  DRange r = detail::d_range(d_max(n, k), d_filter);
  r.lo = std::max(r.lo, first_window_d(n, k));
  if (r.empty()) return 0;
  std::uint64_t total = 0;
  for (unsigned char c : text.distinct_chars()) {
    const PackedBits delta = indicator(text, c).bits;
    total += detail::sum_over_range(
        r.lo, r.hi, threads, [&](std::uint64_t a, std::uint64_t b) {
          std::uint64_t part = 0;
          for (std::uint64_t d = a; d <= b; ++d)
            windowed_scan_d(delta, n, k, d, [&](std::uint64_t) { ++part; });
          return part;
        });
  }
  return total;
}

std::vector<Occurrence> locate_windowed(const Text& text, std::uint64_t k,
                                        std::uint64_t d_filter,
                                        unsigned threads) {
  const std::uint64_t n = text.size();
  DRange r = detail::d_range(d_max(n, k), d_filter);
  r.lo = std::max(r.lo, first_window_d(n, k));
  std::vector<Occurrence> out;
  if (r.empty()) return out;
  for (unsigned char c : text.distinct_chars()) {
    const PackedBits delta = indicator(text, c).bits;
    auto part = detail::collect_over_range<Occurrence>(
        r.lo, r.hi, threads, [&](std::uint64_t a, std::uint64_t b) {
          std::vector<Occurrence> v;
          for (std::uint64_t d = a; d <= b; ++d)
            windowed_scan_d(delta, n, k, d,
                            [&](std::uint64_t i) { v.push_back({i, d}); });
          return v;
        });
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count(const Text& text, const Query& q, std::string* resolved) {
  const std::uint64_t n = text.size();
  d_max(n, q.k);  // validate k
  const auto label = [&](const char* name) {
    if (resolved) *resolved = name;
  };
  switch (q.strategy) {
    case Strategy::Filter:
      label("split");
      return count_filter(text, q.k, q.d_filter);
    case Strategy::WindowedBitParallel:
      label("window");
      return count_windowed(text, q.k, q.d_filter, q.threads);
    case Strategy::Auto:
      break;
  }
  if (static_cast<double>(q.k) >=
      q.tuning.filter_crossover *
          std::sqrt(static_cast<double>(n) *
                    std::log2(static_cast<double>(n)))) {
    label("split");
    return count_filter(text, q.k, q.d_filter);
  }
  const double budget = q.tuning.pairs_budget * static_cast<double>(n) *
                        static_cast<double>(n) /
                        std::log2(static_cast<double>(n));
  const DRange r = detail::d_range(d_max(n, q.k), q.d_filter);
  bool used_pairs = false, used_window = false;
  std::uint64_t total = 0;
  for (unsigned char c : text.distinct_chars()) {
    const double nc = static_cast<double>(text.count_of(c));
    if (static_cast<double>(q.k) * nc * nc < budget) {
      used_pairs = true;
      detail::for_each_pair_subcadence(text, q.k, c, r, [&](Occurrence o) {
        if (is_cadence(o, n, q.k)) ++total;
      });
    } else {
      used_window = true;
      const PackedBits delta = indicator(text, c).bits;
      DRange rw = r;
      rw.lo = std::max(rw.lo, first_window_d(n, q.k));
      total += detail::sum_over_range(
          rw.lo, rw.hi, q.threads, [&](std::uint64_t a, std::uint64_t b) {
            std::uint64_t part = 0;
            for (std::uint64_t d = a; d <= b; ++d)
              windowed_scan_d(delta, n, q.k, d,
                              [&](std::uint64_t) { ++part; });
            return part;
          });
    }
  }
  if (resolved) *resolved = mixed_label(used_pairs, used_window);
  return total;
}

std::vector<Occurrence> locate(const Text& text, const Query& q,
                               std::string* resolved) {
  const std::uint64_t n = text.size();
  d_max(n, q.k);  // validate k
  const auto label = [&](const char* name) {
    if (resolved) *resolved = name;
  };
  switch (q.strategy) {
    case Strategy::Filter:
      label("split");
      return locate_filter(text, q.k, q.d_filter);
    case Strategy::WindowedBitParallel:
      label("window");
      return locate_windowed(text, q.k, q.d_filter, q.threads);
    case Strategy::Auto:
      break;
  }
  if (static_cast<double>(q.k) >=
      q.tuning.filter_crossover *
          std::sqrt(static_cast<double>(n) *
                    std::log2(static_cast<double>(n)))) {
    label("split");
    return locate_filter(text, q.k, q.d_filter);
  }
  const double budget = q.tuning.pairs_budget * static_cast<double>(n) *
                        static_cast<double>(n) /
                        std::log2(static_cast<double>(n));
  const DRange r = detail::d_range(d_max(n, q.k), q.d_filter);
  bool used_pairs = false, used_window = false;
  std::vector<Occurrence> out;
  for (unsigned char c : text.distinct_chars()) {
    const double nc = static_cast<double>(text.count_of(c));
    if (static_cast<double>(q.k) * nc * nc < budget) {
      used_pairs = true;
      detail::for_each_pair_subcadence(text, q.k, c, r, [&](Occurrence o) {
        if (is_cadence(o, n, q.k)) out.push_back(o);
      });
    } else {
      used_window = true;
      const PackedBits delta = indicator(text, c).bits;
      DRange rw = r;
      rw.lo = std::max(rw.lo, first_window_d(n, q.k));
      auto part = detail::collect_over_range<Occurrence>(
          rw.lo, rw.hi, q.threads, [&](std::uint64_t a, std::uint64_t b) {
            std::vector<Occurrence> v;
            for (std::uint64_t d = a; d <= b; ++d)
              windowed_scan_d(delta, n, q.k, d,
                              [&](std::uint64_t i) { v.push_back({i, d}); });
            return v;
          });
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  std::sort(out.begin(), out.end());
  if (resolved) *resolved = mixed_label(used_pairs, used_window);
  return out;
}

}  // namespace equiseq::cadence
