#pragma once

#include <cstdint>
#include <vector>

namespace equiseq::convolution {

// Non-negative integer sequence indexed 0..n.
using IntSeq = std::vector<std::uint64_t>;
// Convolution result indexed 0..2n.
using ConvSeq = std::vector<std::uint64_t>;

// c[z] = sum over x+y = z of a[x] * b[y], computed exactly. A shorter
// operand counts as zero-extended to the longer one, so the result always
// has 2*max(|a|,|b|) - 1 entries. Throws CapacityExceeded if some c[z]
// could reach the transform modulus (impossible for 0/1 operands of any
// realistic length).
ConvSeq acyclic_convolve(const IntSeq& a, const IntSeq& b);

// Same, but restricted to index pairs with x < y. Not symmetric in its
// arguments. Runs in O(n log^2 n) by splitting the index range in half,
// recursing on both halves and convolving the cross rectangle, whose
// pairs all satisfy x < y.
ConvSeq triangle_convolve(const IntSeq& a, const IntSeq& b);

}  // namespace equiseq::convolution
