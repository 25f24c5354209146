#ifndef FSKETCH_REED_MULLER_HPP_
#define FSKETCH_REED_MULLER_HPP_

#include <cstdint>
#include <vector>

#include "fsketch/bit_vector.hpp"

namespace fsketch {

/// First-order Reed-Muller code of length 2^m, dimension m+1 and minimum
/// distance 2^(m-1). A message (a0, a1, ..., am) encodes to the evaluation of
/// a0 ^ a1*x1 ^ ... ^ am*xm over all points of {0,1}^m, where x1 is the least
/// significant bit of the point index. The full codeword table is built at
/// construction (these codes are decoded exhaustively), which caps m at the
/// exhaustive bound.
class ReedMullerCode {
 public:
  static constexpr int kDefaultExhaustiveBound = 8;

  explicit ReedMullerCode(int m, int exhaustive_bound = kDefaultExhaustiveBound);

  int m() const { return m_; }
  std::size_t length() const { return std::size_t(1) << m_; }
  std::size_t dimension() const { return static_cast<std::size_t>(m_) + 1; }
  std::size_t min_distance() const { return std::size_t(1) << (m_ - 1); }

  /// Evaluation-map encoding; message length must be m+1 (index 0 = a0).
  BitVector encode(const BitVector& message) const;

  /// All 2^(m+1) codewords in message order: entry u encodes the message
  /// whose bit t is bit t of u.
  const std::vector<BitVector>& codewords() const { return codewords_; }

  /// Membership test via coefficient extraction and re-encoding.
  bool contains(const BitVector& word) const;

  /// Codeword table flattened to one byte per bit (entry u starts at
  /// u*length()); decoder hot-path view of codewords().
  const std::vector<std::uint8_t>& codeword_bytes() const { return codeword_bytes_; }

 private:
  int m_;
  std::vector<BitVector> codewords_;
  std::vector<std::uint8_t> codeword_bytes_;
};

}  // namespace fsketch

#endif  // FSKETCH_REED_MULLER_HPP_
