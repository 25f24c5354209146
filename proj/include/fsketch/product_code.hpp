#ifndef FSKETCH_PRODUCT_CODE_HPP_
#define FSKETCH_PRODUCT_CODE_HPP_

#include "fsketch/bit_vector.hpp"
#include "fsketch/reed_muller.hpp"

namespace fsketch {

/// Product of two component codes: codewords are the grids whose rows all
/// belong to the row code and whose columns all belong to the column code.
/// Length, dimension and minimum distance are the products of the component
/// parameters. Grids are flattened row-major: coordinate (i, j) maps to index
/// i * row_length() + j.
class ProductCode {
 public:
  ProductCode(ReedMullerCode row_code, ReedMullerCode col_code);

  const ReedMullerCode& row_code() const { return row_code_; }
  const ReedMullerCode& col_code() const { return col_code_; }

  std::size_t row_length() const { return row_code_.length(); }     // grid width
  std::size_t column_length() const { return col_code_.length(); }  // grid height
  std::size_t length() const { return row_length() * column_length(); }
  std::size_t dimension() const { return row_code_.dimension() * col_code_.dimension(); }
  std::size_t min_distance() const { return row_code_.min_distance() * col_code_.min_distance(); }

  /// Encode a message of dimension() bits, laid out as a row-major grid of
  /// col_code().dimension() rows by row_code().dimension() columns: rows are
  /// encoded with the row code, then columns with the column code (the two
  /// orders commute).
  BitVector encode(const BitVector& message) const;

  bool contains(const BitVector& word) const;
  /// False whenever the word still has erased symbols.
  bool contains(const TernaryVector& word) const;

 private:
  ReedMullerCode row_code_;
  ReedMullerCode col_code_;
};

}  // namespace fsketch

#endif  // FSKETCH_PRODUCT_CODE_HPP_
