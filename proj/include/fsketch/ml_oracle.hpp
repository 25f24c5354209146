#ifndef FSKETCH_ML_ORACLE_HPP_
#define FSKETCH_ML_ORACLE_HPP_

#include <span>

#include "fsketch/bit_vector.hpp"

namespace fsketch {

struct MlDecodeResult {
  BitVector codeword;
  /// True when at least two table entries attain the minimum distance.
  bool ambiguous = false;
};

/// Brute-force maximum-likelihood decoding: the table entry nearest to the
/// received word on the non-erased positions. The first entry attaining the
/// minimum is returned; `ambiguous` reports whether the minimum was tied.
MlDecodeResult ml_decode_oracle(std::span<const BitVector> codeword_table,
                                const TernaryVector& received);

}  // namespace fsketch

#endif  // FSKETCH_ML_ORACLE_HPP_
