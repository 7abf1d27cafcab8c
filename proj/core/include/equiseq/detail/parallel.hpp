#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <iterator>
#include <thread>
#include <utility>
#include <vector>

namespace equiseq::detail {

// Splits [lo, hi] into at most `threads` contiguous chunks, runs `work`
// on each, and combines the per-chunk results in chunk order, so the
// outcome is independent of the thread count. `work(d_lo, d_hi)` must
// only touch shared state read-only.
template <typename Result, typename Work, typename Combine>
Result over_chunks(std::uint64_t lo, std::uint64_t hi, unsigned threads,
                   Work&& work, Combine&& combine) {
  Result total{};
  if (lo > hi) return total;
  const std::uint64_t span = hi - lo + 1;
  if (threads <= 1 || span < 2) {
    combine(total, work(lo, hi));
    return total;
  }
  const unsigned chunks =
      static_cast<unsigned>(std::min<std::uint64_t>(threads, span));
  std::vector<Result> partial(chunks);
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  for (unsigned t = 0; t < chunks; ++t) {
    const std::uint64_t a = lo + span * t / chunks;
    const std::uint64_t b = lo + span * (t + 1) / chunks - 1;
    pool.emplace_back([&, t, a, b] {
      try {
        partial[t] = work(a, b);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
  for (auto& part : partial) combine(total, std::move(part));
  return total;
}

template <typename Work>  // Work: (u64 d_lo, u64 d_hi) -> u64
std::uint64_t sum_over_range(std::uint64_t lo, std::uint64_t hi,
                             unsigned threads, Work&& work) {
  return over_chunks<std::uint64_t>(
      lo, hi, threads, std::forward<Work>(work),
      [](std::uint64_t& acc, std::uint64_t part) { acc += part; });
}

template <typename Item, typename Work>  // Work: -> std::vector<Item>
std::vector<Item> collect_over_range(std::uint64_t lo, std::uint64_t hi,
                                     unsigned threads, Work&& work) {
  return over_chunks<std::vector<Item>>(
      lo, hi, threads, std::forward<Work>(work),
      [](std::vector<Item>& acc, std::vector<Item> part) {
        acc.insert(acc.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
      });
}

}  // namespace equiseq::detail
