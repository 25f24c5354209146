#include "fsketch/product_code.hpp"

#include <stdexcept>
#include <utility>

namespace fsketch {

ProductCode::ProductCode(ReedMullerCode row_code, ReedMullerCode col_code)
    : row_code_(std::move(row_code)), col_code_(std::move(col_code)) {}

BitVector ProductCode::encode(const BitVector& message) const {
  if (message.size() != dimension())
    throw std::invalid_argument("ProductCode::encode: message length must be k1*k2");
  const std::size_t k1 = row_code_.dimension();
  const std::size_t k2 = col_code_.dimension();
  const std::size_t n1 = row_length();
  const std::size_t n2 = column_length();

  // Rows first: k2 x k1 message grid -> k2 x n1.
  std::vector<BitVector> rows;
  rows.reserve(k2);
  for (std::size_t r = 0; r < k2; ++r) {
    BitVector msg_row(k1);
    for (std::size_t c = 0; c < k1; ++c) msg_row.set(c, message.get(r * k1 + c));
    rows.push_back(row_code_.encode(msg_row));
  }

  // Then every column of the k2 x n1 grid -> n2 x n1.
  BitVector out(length());
  BitVector msg_col(k2);
  for (std::size_t j = 0; j < n1; ++j) {
    for (std::size_t r = 0; r < k2; ++r) msg_col.set(r, rows[r].get(j));
    const BitVector col = col_code_.encode(msg_col);
    for (std::size_t i = 0; i < n2; ++i) out.set(i * n1 + j, col.get(i));
  }
  return out;
}

bool ProductCode::contains(const BitVector& word) const {
  if (word.size() != length()) return false;
  const std::size_t n1 = row_length();
  const std::size_t n2 = column_length();
  BitVector row(n1);
  for (std::size_t i = 0; i < n2; ++i) {
    for (std::size_t j = 0; j < n1; ++j) row.set(j, word.get(i * n1 + j));
    if (!row_code_.contains(row)) return false;
  }
  BitVector col(n2);
  for (std::size_t j = 0; j < n1; ++j) {
    for (std::size_t i = 0; i < n2; ++i) col.set(i, word.get(i * n1 + j));
    if (!col_code_.contains(col)) return false;
  }
  return true;
}

bool ProductCode::contains(const TernaryVector& word) const {
  if (word.size() != length()) return false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word.get(i) == Trit::erased) return false;
  }
  return contains(word.to_bits());
}

}  // namespace fsketch
