#pragma once

#include <stdexcept>

namespace equiseq {

// Structure length k (or pattern length m) outside the supported range.
struct UnsupportedLength : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Binary bit-vector operation applied to operands of different lengths.
struct LengthMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Position or slice bounds outside [1, len].
struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Convolution inputs whose exact result could reach the transform modulus.
struct CapacityExceeded : std::overflow_error {
  using std::overflow_error::overflow_error;
};

}  // namespace equiseq
