#include "fsketch/reed_muller.hpp"

#include <bit>
#include <stdexcept>

namespace fsketch {

ReedMullerCode::ReedMullerCode(int m, int exhaustive_bound) : m_(m) {
  if (m < 1) throw std::invalid_argument("ReedMullerCode: m must be >= 1");
  if (m > exhaustive_bound)
    throw std::length_error("ReedMullerCode: m exceeds the exhaustive decoding bound");

  const std::size_t n = length();
  const std::size_t k = dimension();
  codewords_.reserve(std::size_t(1) << k);
  codeword_bytes_.reserve((std::size_t(1) << k) * n);
  BitVector message(k);
  for (std::size_t u = 0; u < (std::size_t(1) << k); ++u) {
    for (std::size_t t = 0; t < k; ++t) message.set(t, (u >> t) & 1);
    BitVector cw = encode(message);
    for (std::size_t j = 0; j < n; ++j) codeword_bytes_.push_back(cw.get(j) ? 1 : 0);
    codewords_.push_back(std::move(cw));
  }
}

BitVector ReedMullerCode::encode(const BitVector& message) const {
  if (message.size() != dimension())
    throw std::invalid_argument("ReedMullerCode::encode: message length must be m+1");
  const std::size_t n = length();
  BitVector out(n);
  for (std::size_t p = 0; p < n; ++p) {
    // a0 plus the linear part selected by the bits of the point index.
    bool v = message.get(0);
    std::size_t sel = p;
    for (int i = 1; sel != 0; ++i, sel >>= 1) {
      if ((sel & 1) && message.get(static_cast<std::size_t>(i))) v = !v;
    }
    out.set(p, v);
  }
  return out;
}

bool ReedMullerCode::contains(const BitVector& word) const {
  if (word.size() != length()) return false;
  // Affine coefficients: a0 = value at point 0, ai = a0 ^ value at point e_i.
  BitVector message(dimension());
  message.set(0, word.get(0));
  for (int i = 1; i <= m_; ++i) {
    message.set(static_cast<std::size_t>(i), word.get(std::size_t(1) << (i - 1)) != word.get(0));
  }
  return encode(message) == word;
}

}  // namespace fsketch
