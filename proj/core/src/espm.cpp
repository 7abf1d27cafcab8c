#include "equiseq/espm.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

#include "equiseq/detail/parallel.hpp"
#include "scan_detail.hpp"

namespace equiseq::espm {
namespace {

using detail::DRange;

// Streaming matcher so the d-skip strings never have to be materialised:
// characters are fed one at a time and a match is reported on the one
// that completes it.
class KmpMatcher {
 public:
  explicit KmpMatcher(const Pattern& p) : pat_(p.chars()), fail_(pat_.size()) {
    for (std::size_t q = 1, s = 0; q < pat_.size(); ++q) {
      while (s > 0 && pat_[q] != pat_[s]) s = fail_[s - 1];
      if (pat_[q] == pat_[s]) ++s;
      fail_[q] = s;
    }
  }

  void restart() { state_ = 0; }

  bool feed(unsigned char ch) {
    while (state_ > 0 && static_cast<unsigned char>(pat_[state_]) != ch)
      state_ = fail_[state_ - 1];
    if (static_cast<unsigned char>(pat_[state_]) == ch) ++state_;
    if (state_ == pat_.size()) {
      state_ = fail_[state_ - 1];
      return true;
    }
    return false;
  }

 private:
  std::string pat_;
  std::vector<std::size_t> fail_;
  std::size_t state_ = 0;
};

void require_pattern(const Pattern& p) {
  if (p.size() < 2)
    throw UnsupportedLength("pattern length m must be at least 2");
}

template <typename Sink>
void for_each_split_match(const Text& text, const Pattern& p, DRange range,
                          Sink&& sink) {
  const std::uint64_t m = p.size();
  KmpMatcher matcher(p);
  for (std::uint64_t d = range.lo; d <= range.hi; ++d) {
    for (std::uint64_t r = 1; r <= d && r <= text.size(); ++r) {
      const SkipString s{&text, r, d};
      const std::uint64_t len = s.size();
      matcher.restart();
      for (std::uint64_t j = 1; j <= len; ++j)
        if (matcher.feed(s.at(j)))
          sink(Occurrence{s.text_position(j - m + 1), d});
    }
  }
}

// One indicator per distinct pattern character, then per start word the
// running AND of the indicator of P[j+1] read at offset j*d.
struct IndicatorBank {
  std::vector<PackedBits> store;
  std::vector<const PackedBits*> at;  // at[j] = indicator of P[j+1]

  IndicatorBank(const Text& text, const Pattern& p) {
    std::array<int, 256> slot;
    slot.fill(-1);
    store.reserve(p.alphabet().size());
    for (unsigned char c : p.alphabet()) {
      slot[c] = static_cast<int>(store.size());
      store.push_back(indicator(text, c).bits);
    }
    at.resize(p.size());
    for (std::uint64_t j = 0; j < p.size(); ++j)
      at[j] = &store[static_cast<std::size_t>(slot[p.at(j + 1)])];
  }
};

template <typename Emit>  // Emit: (start position)
void bitpar_scan_d(const IndicatorBank& bank, std::uint64_t n,
                   std::uint64_t m, std::uint64_t d, Emit&& emit) {
  const std::uint64_t span = (m - 1) * d;
  if (span >= n) return;
  const std::uint64_t nwords = PackedBits::words_for(n - span);
  for (std::uint64_t w = 0; w < nwords; ++w) {
    const std::uint64_t base = (w << 6) + 1;
    std::uint64_t acc = bank.at[0]->word_at(base);
    for (std::uint64_t j = 1; j < m && acc != 0; ++j)
      acc &= bank.at[j]->word_at(base + j * d);
    while (acc != 0) {
      emit(base + static_cast<std::uint64_t>(std::countr_zero(acc)));
      acc &= acc - 1;
    }
  }
}

bool pattern_char_missing(const Text& text, const Pattern& p) {
  for (unsigned char c : p.alphabet())
    if (text.count_of(c) == 0) return true;
  return false;
}

}  // namespace

std::vector<std::uint64_t> kmp_search(std::string_view haystack,
                                      const Pattern& needle) {
  std::vector<std::uint64_t> out;
  if (needle.size() > haystack.size()) return out;
  KmpMatcher matcher(needle);
  for (std::size_t t = 0; t < haystack.size(); ++t)
    if (matcher.feed(static_cast<unsigned char>(haystack[t])))
      out.push_back(t + 2 - needle.size());
  return out;
}

std::vector<Occurrence> locate_split(const Text& text, const Pattern& p,
                                     std::uint64_t d_filter) {
  require_pattern(p);
  const DRange r = detail::d_range(d_max(text.size(), p.size()), d_filter);
  std::vector<Occurrence> out;
  for_each_split_match(text, p, r, [&](Occurrence o) { out.push_back(o); });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_split(const Text& text, const Pattern& p,
                          std::uint64_t d_filter) {
  require_pattern(p);
  const DRange r = detail::d_range(d_max(text.size(), p.size()), d_filter);
  std::uint64_t total = 0;
  for_each_split_match(text, p, r, [&](Occurrence) { ++total; });
  return total;
}

std::uint64_t count_bitpar(const Text& text, const Pattern& p,
                           std::uint64_t d_filter, unsigned threads) {
  require_pattern(p);
  const std::uint64_t n = text.size();
  const DRange r = detail::d_range(d_max(n, p.size()), d_filter);
  if (r.empty() || pattern_char_missing(text, p)) return 0;
  const IndicatorBank bank(text, p);
  return detail::sum_over_range(
      r.lo, r.hi, threads, [&](std::uint64_t a, std::uint64_t b) {
        std::uint64_t part = 0;
        for (std::uint64_t d = a; d <= b; ++d)
          bitpar_scan_d(bank, n, p.size(), d, [&](std::uint64_t) { ++part; });
        return part;
      });
}

std::vector<Occurrence> locate_bitpar(const Text& text, const Pattern& p,
                                      std::uint64_t d_filter,
                                      unsigned threads) {
  require_pattern(p);
  const std::uint64_t n = text.size();
  const DRange r = detail::d_range(d_max(n, p.size()), d_filter);
  if (r.empty() || pattern_char_missing(text, p)) return {};
  const IndicatorBank bank(text, p);
  auto out = detail::collect_over_range<Occurrence>(
      r.lo, r.hi, threads, [&](std::uint64_t a, std::uint64_t b) {
        std::vector<Occurrence> v;
        for (std::uint64_t d = a; d <= b; ++d)
          bitpar_scan_d(bank, n, p.size(), d,
                        [&](std::uint64_t i) { v.push_back({i, d}); });
        return v;
      });
  // chunks arrive in ascending d and ascending i within d already
  return out;
}

std::uint64_t count(const Text& text, const Pattern& p, const Options& opt,
                    std::string* resolved) {
  require_pattern(p);
  const auto label = [&](const char* name) {
    if (resolved) *resolved = name;
  };
  Strategy s = opt.strategy;
  if (s == Strategy::Auto)
    s = static_cast<double>(p.size()) <
                opt.tuning.bitpar_crossover *
                    std::log2(static_cast<double>(text.size()))
            ? Strategy::BitParallel
            : Strategy::Split;
  if (s == Strategy::BitParallel) {
    label("bitpar");
    return count_bitpar(text, p, opt.d_filter, opt.threads);
  }
  label("split");
  return count_split(text, p, opt.d_filter);
}

std::vector<Occurrence> locate(const Text& text, const Pattern& p,
                               const Options& opt, std::string* resolved) {
  require_pattern(p);
  const auto label = [&](const char* name) {
    if (resolved) *resolved = name;
  };
  Strategy s = opt.strategy;
  if (s == Strategy::Auto)
    s = static_cast<double>(p.size()) <
                opt.tuning.bitpar_crossover *
                    std::log2(static_cast<double>(text.size()))
            ? Strategy::BitParallel
            : Strategy::Split;
  if (s == Strategy::BitParallel) {
    label("bitpar");
    return locate_bitpar(text, p, opt.d_filter, opt.threads);
  }
  label("split");
  return locate_split(text, p, opt.d_filter);
}

}  // namespace equiseq::espm
