#pragma once

#include <cstdint>
#include <vector>

#include "equiseq/text.hpp"

namespace equiseq::length3 {

// Per-middle-position breakdown of a count: g[z-1] occurrences have their
// middle character at text position z, and total is their sum.
struct CountProfile {
  std::vector<std::uint64_t> g;
  std::uint64_t total = 0;
};

// Occurrences of a length-3 pattern as an equidistant subsequence,
// counted by middle position via convolution: an occurrence (i, d) with
// middle z = i + d corresponds to an index pair (z-d, z+d) summing to 2z,
// so convolving endpoint indicators and reading the even entries counts
// all occurrences at once. Symmetric patterns (first = last character)
// use one ordinary convolution, the rest one triangle convolution.
CountProfile count_esp3(const Text& text, const Pattern& p);

// Occurrences where the three sampled characters are a permutation of the
// pattern's characters. Needs at most three ordinary convolutions.
CountProfile count_abelian3(const Text& text, const Pattern& p);

}  // namespace equiseq::length3
