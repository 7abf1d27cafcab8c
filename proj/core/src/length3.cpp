#include "equiseq/length3.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "equiseq/convolution.hpp"
#include "equiseq/errors.hpp"

namespace equiseq::length3 {
namespace {

using convolution::ConvSeq;
using convolution::IntSeq;

// Indicator of c as an integer sequence indexed 0..n (slot 0 stays zero
// so sequence indices coincide with text positions).
IntSeq char_seq(const Text& text, unsigned char c) {
  IntSeq v(text.size() + 1, 0);
  for (std::uint64_t i = 1; i <= text.size(); ++i) v[i] = text.at(i) == c;
  return v;
}

void require_length3(const Pattern& p) {
  if (p.size() != 3)
    throw UnsupportedLength("convolution counting needs a length-3 pattern");
}

}  // namespace

CountProfile count_esp3(const Text& text, const Pattern& p) {
  require_length3(p);
  const std::uint64_t n = text.size();
  CountProfile out;
  out.g.assign(n, 0);
  if (n == 0) return out;
  const unsigned char first = p.at(1), middle = p.at(2), last = p.at(3);
  if (first == last) {
    // Endpoint pairs (z-d, z+d) of the same character: each unordered
    // pair is seen twice in the full convolution, and the diagonal term
    // x = y = z appears exactly when T[z] is that character.
    const IntSeq delta = char_seq(text, first);
    const ConvSeq conv = convolution::acyclic_convolve(delta, delta);
    for (std::uint64_t z = 1; z <= n; ++z) {
      if (text.at(z) != middle) continue;
      const std::uint64_t v = conv[2 * z];
      if (middle == first) {
        if (v % 2 == 0)
          throw std::logic_error("even diagonal convolution entry");
        out.g[z - 1] = (v - 1) / 2;
      } else {
        if (v % 2 != 0)
          throw std::logic_error("odd off-diagonal convolution entry");
        out.g[z - 1] = v / 2;
      }
    }
  } else {
    // Distinct endpoints: order matters, so only pairs with the first
    // character strictly left of the last may count.
    const ConvSeq conv = convolution::triangle_convolve(
        char_seq(text, first), char_seq(text, last));
    for (std::uint64_t z = 1; z <= n; ++z)
      if (text.at(z) == middle) out.g[z - 1] = conv[2 * z];
  }
  for (std::uint64_t v : out.g) out.total += v;
  return out;
}

CountProfile count_abelian3(const Text& text, const Pattern& p) {
  require_length3(p);
  const std::uint64_t n = text.size();
  std::array<unsigned char, 3> s{p.at(1), p.at(2), p.at(3)};
  std::sort(s.begin(), s.end());
  if (s[0] == s[2]) return count_esp3(text, p);  // single-character multiset
  CountProfile out;
  out.g.assign(n, 0);
  if (n == 0) return out;
  if (s[0] != s[1] && s[1] != s[2]) {
    // Three distinct characters: for each choice of middle, the two
    // endpoints may sit in either order, which is exactly what the full
    // convolution of the other two indicators counts.
    const IntSeq da = char_seq(text, s[0]);
    const IntSeq db = char_seq(text, s[1]);
    const IntSeq dc = char_seq(text, s[2]);
    const ConvSeq cbc = convolution::acyclic_convolve(db, dc);
    const ConvSeq cac = convolution::acyclic_convolve(da, dc);
    const ConvSeq cab = convolution::acyclic_convolve(da, db);
    for (std::uint64_t z = 1; z <= n; ++z) {
      const unsigned char t = text.at(z);
      if (t == s[0]) out.g[z - 1] = cbc[2 * z];
      else if (t == s[1]) out.g[z - 1] = cac[2 * z];
      else if (t == s[2]) out.g[z - 1] = cab[2 * z];
    }
  } else {
    // Multiset {rep, rep, solo}: middle = rep pairs one rep with the solo
    // in either order; middle = solo pairs two reps, each unordered pair
    // counted twice with no possible diagonal term.
    const unsigned char rep = s[0] == s[1] ? s[0] : s[2];
    const unsigned char solo = s[0] == s[1] ? s[2] : s[0];
    const IntSeq dr = char_seq(text, rep);
    const ConvSeq crs =
        convolution::acyclic_convolve(dr, char_seq(text, solo));
    const ConvSeq crr = convolution::acyclic_convolve(dr, dr);
    for (std::uint64_t z = 1; z <= n; ++z) {
      const unsigned char t = text.at(z);
      if (t == rep) {
        out.g[z - 1] = crs[2 * z];
      } else if (t == solo) {
        const std::uint64_t v = crr[2 * z];
        if (v % 2 != 0)
          throw std::logic_error("odd off-diagonal convolution entry");
        out.g[z - 1] = v / 2;
      }
    }
  }
  for (std::uint64_t v : out.g) out.total += v;
  return out;
}

}  // namespace equiseq::length3
