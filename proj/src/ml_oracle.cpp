#include "fsketch/ml_oracle.hpp"

#include <stdexcept>

namespace fsketch {

MlDecodeResult ml_decode_oracle(std::span<const BitVector> codeword_table,
                                const TernaryVector& received) {
  if (codeword_table.empty()) throw std::invalid_argument("ml_decode_oracle: empty table");
  const std::size_t n = codeword_table[0].size();
  if (received.size() != n) throw std::invalid_argument("ml_decode_oracle: length mismatch");

  MlDecodeResult result;
  std::size_t best = n + 1;
  for (const BitVector& cw : codeword_table) {
    std::size_t d = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Trit t = received.get(j);
      if (t == Trit::erased) continue;
      if ((t == Trit::one) != cw.get(j)) ++d;
    }
    if (d < best) {
      best = d;
      result.codeword = cw;
      result.ambiguous = false;
    } else if (d == best) {
      result.ambiguous = true;
    }
  }
  return result;
}

}  // namespace fsketch
