#include "equiseq/text.hpp"

#include <algorithm>

namespace equiseq {

std::vector<unsigned char> Text::distinct_chars() const {
  std::vector<unsigned char> out;
  for (unsigned v = 0; v < 256; ++v)
    if (freq_[v] > 0) out.push_back(static_cast<unsigned char>(v));
  return out;
}

Pattern::Pattern(std::string chars) : chars_(std::move(chars)) {
  if (chars_.empty()) throw UnsupportedLength("pattern must be non-empty");
  alphabet_.assign(chars_.begin(), chars_.end());
  std::sort(alphabet_.begin(), alphabet_.end());
  alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()),
                  alphabet_.end());
}

CharIndicator indicator(const Text& text, unsigned char c) {
  CharIndicator out{c, PackedBits(text.size())};
  const std::string_view bytes = text.bytes();
  for (std::uint64_t i = 0; i < bytes.size(); ++i)
    if (static_cast<unsigned char>(bytes[i]) == c) out.bits.set(i + 1);
  return out;
}

PositionList positions(const Text& text, unsigned char c) {
  PositionList out{c, {}};
  out.positions.reserve(text.count_of(c));
  const std::string_view bytes = text.bytes();
  for (std::uint64_t i = 0; i < bytes.size(); ++i)
    if (static_cast<unsigned char>(bytes[i]) == c) out.positions.push_back(i + 1);
  return out;
}

std::uint64_t d_max(std::uint64_t n, std::uint64_t k) {
  if (k < 2) throw UnsupportedLength("structure length k must be at least 2");
  if (n <= 1) return 0;
  return (n - 1) / (k - 1);
}

}  // namespace equiseq
