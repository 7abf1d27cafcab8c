#include "equiseq/convolution.hpp"

#include <algorithm>
#include <bit>
#include <span>
#include <utility>

#include "equiseq/errors.hpp"

namespace equiseq::convolution {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// NTT-friendly prime 29 * 2^57 + 1 with primitive root 3. Transforms of
// length up to 2^57 exist and any coefficient below the modulus survives
// the round trip unchanged, so the arithmetic is exact whenever the true
// result fits under kMod; callers check that bound up front.
constexpr u64 kMod = 4179340454199820289ULL;
constexpr u64 kRoot = 3;

// Montgomery arithmetic, operands and results kept in [0, 2*kMod).
constexpr u64 kModInv = [] {  // kMod^-1 mod 2^64
  u64 inv = 1;
  for (int it = 0; it < 6; ++it) inv *= 2 - kMod * inv;
  return inv;
}();
constexpr u64 kR2 =  // 2^128 mod kMod
    static_cast<u64>((~u128{0}) % kMod + 1);

inline u64 mont_reduce(u128 x) {
  const u64 q = static_cast<u64>(x) * kModInv;
  const u64 m = static_cast<u64>((u128(q) * kMod) >> 64);
  return static_cast<u64>(x >> 64) + kMod - m;
}

inline u64 mont_mul(u64 a, u64 b) { return mont_reduce(u128(a) * b); }
inline u64 to_mont(u64 a) { return mont_mul(a, kR2); }
inline u64 from_mont(u64 a) {
  u64 r = mont_reduce(a);
  return r >= kMod ? r - kMod : r;
}
inline u64 mont_add(u64 a, u64 b) {
  u64 r = a + b;
  return r >= 2 * kMod ? r - 2 * kMod : r;
}
inline u64 mont_sub(u64 a, u64 b) {
  u64 r = a - b;
  return a < b ? r + 2 * kMod : r;
}
u64 mont_pow(u64 base, u64 e) {
  u64 r = to_mont(1);
  for (; e != 0; e >>= 1, base = mont_mul(base, base))
    if (e & 1) r = mont_mul(r, base);
  return r;
}

void ntt(std::vector<u64>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    u64 w = mont_pow(to_mont(kRoot), (kMod - 1) / len);
    if (inverse) w = mont_pow(w, kMod - 2);
    for (std::size_t i = 0; i < n; i += len) {
      u64 wj = to_mont(1);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const u64 u = a[i + j];
        const u64 v = mont_mul(a[i + j + len / 2], wj);
        a[i + j] = mont_add(u, v);
        a[i + j + len / 2] = mont_sub(u, v);
        wj = mont_mul(wj, w);
      }
    }
  }
  if (inverse) {
    const u64 scale = mont_pow(to_mont(static_cast<u64>(n)), kMod - 2);
    for (u64& x : a) x = mont_mul(x, scale);
  }
}

constexpr std::size_t kSchoolbookCutoff = 32;

// Plain linear convolution of two slices, exact under the caller's
// capacity check. Result length |a| + |b| - 1; empty if either is empty.
std::vector<u64> multiply(std::span<const u64> a, std::span<const u64> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t rlen = a.size() + b.size() - 1;
  if (std::min(a.size(), b.size()) <= kSchoolbookCutoff) {
    std::vector<u64> c(rlen, 0);
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (a[x] == 0) continue;
      for (std::size_t y = 0; y < b.size(); ++y) c[x + y] += a[x] * b[y];
    }
    return c;
  }
  const std::size_t size = std::bit_ceil(rlen);
  std::vector<u64> fa(size, 0), fb(size, 0);
  for (std::size_t x = 0; x < a.size(); ++x) fa[x] = to_mont(a[x]);
  for (std::size_t y = 0; y < b.size(); ++y) fb[y] = to_mont(b[y]);
  ntt(fa, false);
  ntt(fb, false);
  for (std::size_t t = 0; t < size; ++t) fa[t] = mont_mul(fa[t], fb[t]);
  ntt(fa, true);
  std::vector<u64> c(rlen);
  for (std::size_t t = 0; t < rlen; ++t) c[t] = from_mont(fa[t]);
  return c;
}

void check_capacity(const IntSeq& a, const IntSeq& b) {
  u64 ma = 0, mb = 0;
  for (u64 v : a) ma = std::max(ma, v);
  for (u64 v : b) mb = std::max(mb, v);
  const u128 bound = u128(ma) * mb * std::min(a.size(), b.size());
  if (bound >= kMod)
    throw CapacityExceeded("convolution result could reach the modulus");
}

std::span<const u64> slice(const IntSeq& v, std::size_t lo, std::size_t hi) {
  if (lo >= v.size()) return {};
  return std::span<const u64>(v).subspan(lo, std::min(hi, v.size() - 1) - lo + 1);
}

}  // namespace

ConvSeq acyclic_convolve(const IntSeq& a, const IntSeq& b) {
  const std::size_t len = std::max(a.size(), b.size());
  if (len == 0) return {};
  check_capacity(a, b);
  ConvSeq c = multiply(a, b);
  c.resize(2 * len - 1, 0);
  return c;
}

ConvSeq triangle_convolve(const IntSeq& a, const IntSeq& b) {
  const std::size_t len = std::max(a.size(), b.size());
  if (len == 0) return {};
  check_capacity(a, b);
  ConvSeq c(2 * len - 1, 0);
  // Recurse on [lo, hi]: pairs inside either half are handled by the
  // recursion, pairs across the split all have x <= mid < y and form a
  // full rectangle convolution.
  auto solve = [&](auto&& self, std::size_t lo, std::size_t hi) -> void {
    if (hi - lo + 1 <= kSchoolbookCutoff) {
      const std::size_t xend = std::min<std::size_t>(hi + 1, a.size());
      const std::size_t yend = std::min<std::size_t>(hi + 1, b.size());
      for (std::size_t x = lo; x < xend; ++x) {
        if (a[x] == 0) continue;
        for (std::size_t y = x + 1; y < yend; ++y) c[x + y] += a[x] * b[y];
      }
      return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    self(self, lo, mid);
    self(self, mid + 1, hi);
    const auto part = multiply(slice(a, lo, mid), slice(b, mid + 1, hi));
    for (std::size_t t = 0; t < part.size(); ++t) c[lo + mid + 1 + t] += part[t];
  };
  solve(solve, 0, len - 1);
  return c;
}

}  // namespace equiseq::convolution
