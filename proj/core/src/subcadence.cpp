#include "equiseq/subcadence.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "equiseq/detail/parallel.hpp"
#include "scan_detail.hpp"

namespace equiseq::subcadence {
namespace {

using detail::DRange;

// popcount of delta & delta.shift_low(d) & ... & delta.shift_low((k-1)d)
// without materialising the intermediate vectors. A surviving bit i needs
// delta[i + jd] = 1 for all j, so positions past n - (k-1)d are dead and
// the word loop stops there; within the last word the j = k-1 read runs
// past the end of delta and returns zeros, killing the overhang bits.
std::uint64_t bitpar_count_d_any(const PackedBits& delta, std::uint64_t k,
                                 std::uint64_t d, std::uint64_t from_word) {
  const std::uint64_t n = delta.size();
  const std::uint64_t span = (k - 1) * d;
  if (span >= n) return 0;
  const std::uint64_t nwords = PackedBits::words_for(n - span);
  std::uint64_t total = 0;
  for (std::uint64_t w = from_word; w < nwords; ++w) {
    const std::uint64_t base = (w << 6) + 1;
    std::uint64_t acc = delta.word_at(base);
    for (std::uint64_t j = 1; j < k && acc != 0; ++j)
      acc &= delta.word_at(base + j * d);
    total += detail::popcount64(acc);
  }
  return total;
}

// Same computation for a compile-time k: view j is the word stream of
// delta offset by jd bits, advanced one rolling word per iteration. Word
// index and intra-word shift of each stream are loop invariants, and the
// bulk loop runs only while every stream's lookahead word exists, so it
// carries no bounds checks; the few boundary words fall back to the
// guarded reader above. The double shift keeps the funnel defined when a
// stream happens to be word-aligned.
template <unsigned K>
std::uint64_t bitpar_count_d_fixed(const PackedBits& delta, std::uint64_t d) {
  const std::uint64_t n = delta.size();
  const std::uint64_t span = (K - 1) * d;
  if (span >= n) return 0;
  const std::uint64_t nwords = PackedBits::words_for(n - span);
  const std::span<const std::uint64_t> words = delta.words();
  std::uint64_t base[K];
  unsigned sh[K];
  std::uint64_t cur[K];
  for (unsigned j = 0; j < K; ++j) {
    base[j] = (j * d) >> 6;
    sh[j] = static_cast<unsigned>((j * d) & 63);
    cur[j] = words[base[j]];
  }
  const std::uint64_t lookahead = base[K - 1] + 1;
  const std::uint64_t bulk =
      words.size() > lookahead
          ? std::min<std::uint64_t>(nwords, words.size() - lookahead)
          : 0;
  std::uint64_t total = 0;
  for (std::uint64_t w = 0; w < bulk; ++w) {
    std::uint64_t acc = ~std::uint64_t{0};
    for (unsigned j = 0; j < K; ++j) {
      const std::uint64_t nxt = words[w + base[j] + 1];
      acc &= (cur[j] >> sh[j]) | ((nxt << 1) << (63 - sh[j]));
      cur[j] = nxt;
    }
    total += detail::popcount64(acc);
  }
  return total + bitpar_count_d_any(delta, K, d, bulk);
}

std::uint64_t bitpar_count_d(const PackedBits& delta, std::uint64_t k,
                             std::uint64_t d) {
  switch (k) {
    case 2: return bitpar_count_d_fixed<2>(delta, d);
    case 3: return bitpar_count_d_fixed<3>(delta, d);
    case 4: return bitpar_count_d_fixed<4>(delta, d);
    case 5: return bitpar_count_d_fixed<5>(delta, d);
    case 6: return bitpar_count_d_fixed<6>(delta, d);
    case 7: return bitpar_count_d_fixed<7>(delta, d);
    case 8: return bitpar_count_d_fixed<8>(delta, d);
    default: return bitpar_count_d_any(delta, k, d, 0);
  }
}

template <typename Emit>  // Emit: (start position)
void bitpar_locate_d(const PackedBits& delta, std::uint64_t k,
                     std::uint64_t d, Emit&& emit) {
  const std::uint64_t n = delta.size();
  const std::uint64_t span = (k - 1) * d;
  if (span >= n) return;
  const std::uint64_t nwords = PackedBits::words_for(n - span);
  for (std::uint64_t w = 0; w < nwords; ++w) {
    const std::uint64_t base = (w << 6) + 1;
    std::uint64_t acc = delta.word_at(base);
    for (std::uint64_t j = 1; j < k && acc != 0; ++j)
      acc &= delta.word_at(base + j * d);
    while (acc != 0) {
      emit(base + static_cast<std::uint64_t>(std::countr_zero(acc)));
      acc &= acc - 1;
    }
  }
}

std::uint64_t bitpar_count_char(const PackedBits& delta, std::uint64_t k,
                                DRange r, unsigned threads) {
  return detail::sum_over_range(r.lo, r.hi, threads,
                                [&](std::uint64_t a, std::uint64_t b) {
                                  std::uint64_t part = 0;
                                  for (std::uint64_t d = a; d <= b; ++d)
                                    part += bitpar_count_d(delta, k, d);
                                  return part;
                                });
}

std::vector<Occurrence> bitpar_locate_char(const PackedBits& delta,
                                           std::uint64_t k, DRange r,
                                           unsigned threads) {
  return detail::collect_over_range<Occurrence>(
      r.lo, r.hi, threads, [&](std::uint64_t a, std::uint64_t b) {
        std::vector<Occurrence> part;
        for (std::uint64_t d = a; d <= b; ++d)
          bitpar_locate_d(delta, k, d,
                          [&](std::uint64_t i) { part.push_back({i, d}); });
        return part;
      });
}

std::string mixed_label(bool used_pairs, bool used_bitpar) {
  if (used_pairs && used_bitpar) return "pairs+bitpar";
  return used_pairs ? "pairs" : "bitpar";
}

}  // namespace

std::vector<Occurrence> locate_split(const Text& text, std::uint64_t k,
                                     std::uint64_t d_filter) {
  const DRange r = detail::d_range(d_max(text.size(), k), d_filter);
  std::vector<Occurrence> out;
  detail::for_each_split_subcadence(text, k, r,
                                    [&](Occurrence o) { out.push_back(o); });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_split(const Text& text, std::uint64_t k,
                          std::uint64_t d_filter) {
  const DRange r = detail::d_range(d_max(text.size(), k), d_filter);
  std::uint64_t total = 0;
  detail::for_each_split_subcadence(text, k, r, [&](Occurrence) { ++total; });
  return total;
}

std::uint64_t count_bitpar(const Text& text, std::uint64_t k,
                           std::uint64_t d_filter, unsigned threads) {
  const DRange r = detail::d_range(d_max(text.size(), k), d_filter);
  if (r.empty()) return 0;
  std::uint64_t total = 0;
  for (unsigned char c : text.distinct_chars()) {
    const PackedBits delta = indicator(text, c).bits;
    total += bitpar_count_char(delta, k, r, threads);
  }
  return total;
}

std::vector<Occurrence> locate_bitpar(const Text& text, std::uint64_t k,
                                      std::uint64_t d_filter,
                                      unsigned threads) {
  const DRange r = detail::d_range(d_max(text.size(), k), d_filter);
  std::vector<Occurrence> out;
  if (r.empty()) return out;
  for (unsigned char c : text.distinct_chars()) {
    const PackedBits delta = indicator(text, c).bits;
    auto part = bitpar_locate_char(delta, k, r, threads);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_pairs(const Text& text, std::uint64_t k, unsigned char c,
                          std::uint64_t d_filter) {
  const DRange r = detail::d_range(d_max(text.size(), k), d_filter);
  if (r.empty()) return 0;
  std::uint64_t total = 0;
  detail::for_each_pair_subcadence(text, k, c, r,
                                   [&](Occurrence) { ++total; });
  return total;
}

std::vector<Occurrence> locate_pairs(const Text& text, std::uint64_t k,
                                     std::uint64_t d_filter) {
  const DRange r = detail::d_range(d_max(text.size(), k), d_filter);
  std::vector<Occurrence> out;
  if (r.empty()) return out;
  for (unsigned char c : text.distinct_chars())
    detail::for_each_pair_subcadence(text, k, c, r,
                                     [&](Occurrence o) { out.push_back(o); });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count(const Text& text, const Query& q, std::string* resolved) {
  const std::uint64_t n = text.size();
  const std::uint64_t dmax = d_max(n, q.k);
  const auto label = [&](const char* name) {
    if (resolved) *resolved = name;
  };
  switch (q.strategy) {
    case Strategy::Split:
      label("split");
      return count_split(text, q.k, q.d_filter);
    case Strategy::BitParallel:
      label("bitpar");
      return count_bitpar(text, q.k, q.d_filter, q.threads);
    case Strategy::Pairs: {
      label("pairs");
      std::uint64_t total = 0;
      for (unsigned char c : text.distinct_chars())
        total += count_pairs(text, q.k, c, q.d_filter);
      return total;
    }
    case Strategy::Auto:
      break;
  }
  if (static_cast<double>(q.k) >=
      q.tuning.split_crossover * std::log2(static_cast<double>(n))) {
    label("split");
    return count_split(text, q.k, q.d_filter);
  }
  const DRange r = detail::d_range(dmax, q.d_filter);
  const double budget = q.tuning.pairs_budget * static_cast<double>(n) *
                        static_cast<double>(n) /
                        std::log2(static_cast<double>(n));
  bool used_pairs = false, used_bitpar = false;
  std::uint64_t total = 0;
  for (unsigned char c : text.distinct_chars()) {
    const double nc = static_cast<double>(text.count_of(c));
    if (static_cast<double>(q.k) * nc * nc < budget) {
      used_pairs = true;
      total += count_pairs(text, q.k, c, q.d_filter);
    } else {
      used_bitpar = true;
      const PackedBits delta = indicator(text, c).bits;
      total += bitpar_count_char(delta, q.k, r, q.threads);
    }
  }
  if (resolved) *resolved = mixed_label(used_pairs, used_bitpar);
  return total;
}

std::vector<Occurrence> locate(const Text& text, const Query& q,
                               std::string* resolved) {
  const std::uint64_t n = text.size();
  const std::uint64_t dmax = d_max(n, q.k);
  const auto label = [&](const char* name) {
    if (resolved) *resolved = name;
  };
  switch (q.strategy) {
    case Strategy::Split:
      label("split");
      return locate_split(text, q.k, q.d_filter);
    case Strategy::BitParallel:
      label("bitpar");
      return locate_bitpar(text, q.k, q.d_filter, q.threads);
    case Strategy::Pairs:
      label("pairs");
      return locate_pairs(text, q.k, q.d_filter);
    case Strategy::Auto:
      break;
  }
  if (static_cast<double>(q.k) >=
      q.tuning.split_crossover * std::log2(static_cast<double>(n))) {
    label("split");
    return locate_split(text, q.k, q.d_filter);
  }
  const DRange r = detail::d_range(dmax, q.d_filter);
  const double budget = q.tuning.pairs_budget * static_cast<double>(n) *
                        static_cast<double>(n) /
                        std::log2(static_cast<double>(n));
  bool used_pairs = false, used_bitpar = false;
  std::vector<Occurrence> out;
  for (unsigned char c : text.distinct_chars()) {
    const double nc = static_cast<double>(text.count_of(c));
    if (static_cast<double>(q.k) * nc * nc < budget) {
      used_pairs = true;
      detail::for_each_pair_subcadence(
          text, q.k, c, r, [&](Occurrence o) { out.push_back(o); });
    } else {
      used_bitpar = true;
      const PackedBits delta = indicator(text, c).bits;
      auto part = bitpar_locate_char(delta, q.k, r, q.threads);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  std::sort(out.begin(), out.end());
  if (resolved) *resolved = mixed_label(used_pairs, used_bitpar);
  return out;
}

}  // namespace equiseq::subcadence
