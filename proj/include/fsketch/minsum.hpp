#ifndef FSKETCH_MINSUM_HPP_
#define FSKETCH_MINSUM_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "fsketch/bit_vector.hpp"
#include "fsketch/product_code.hpp"

namespace fsketch {

using Cost = std::int32_t;

/// Values are clamped here after each per-coordinate normalization. The raw
/// recursion's values diverge on non-decodable inputs (normalization bounds
/// the minimum at 0, not the maximum), so a ceiling is required for the
/// arithmetic to stay exact; any value this large can no longer change a
/// decision. Line sums stay below 2^28 for component lengths up to 256.
inline constexpr Cost kCostCeiling = 1 << 20;

inline constexpr int kDefaultMaxIterations = 20;

/// Per-coordinate cost pairs (cost of symbol 0, cost of symbol 1) on the
/// product grid; the state passed between decoding iterations.
class CostTable {
 public:
  CostTable() = default;
  CostTable(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), plane0_(rows * cols, 0), plane1_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Cost cost0(std::size_t i, std::size_t j) const { return plane0_[i * cols_ + j]; }
  Cost cost1(std::size_t i, std::size_t j) const { return plane1_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Cost c0, Cost c1) {
    plane0_[i * cols_ + j] = c0;
    plane1_[i * cols_ + j] = c1;
  }

  std::span<const Cost> plane0() const { return plane0_; }
  std::span<const Cost> plane1() const { return plane1_; }
  std::span<Cost> plane0() { return plane0_; }
  std::span<Cost> plane1() { return plane1_; }

  CostTable transposed() const;

  bool operator==(const CostTable&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Cost> plane0_, plane1_;  // row-major
};

/// Initial costs: a received 0/1 symbol costs 0 to keep and 1 to flip; an
/// erased symbol carries no information, (0, 0).
CostTable init_costs(const TernaryVector& received, const ProductCode& pc);

/// One row pass: for every row, the cost of each symbol value at each
/// coordinate becomes the minimum total cost of any row-code codeword taking
/// that value there; then each coordinate is normalized by subtracting
/// min(cost0, cost1).
CostTable row_iteration(const CostTable& in, const ProductCode& pc);

/// Column pass: the row pass with row/column roles swapped and the column
/// code in place of the row code.
CostTable column_iteration(const CostTable& in, const ProductCode& pc);

/// Strict-inequality decision per coordinate; equal costs leave the symbol
/// erased/undecided. Result is the row-major flattening of the grid.
TernaryVector hard_decision(const CostTable& costs);

enum class DecodeStatus : std::uint8_t {
  kCodeword,       // hard decision settled on a product codeword
  kUndecided,      // budget exhausted with undecided symbols left
  kMaxIterations,  // budget exhausted on a full word that is not a codeword
};

const char* to_string(DecodeStatus s);

struct DecodeResult {
  DecodeStatus status = DecodeStatus::kUndecided;
  TernaryVector word;
  int iterations_used = 0;
};

/// Iterative decoding: alternate row and column passes (row first), checking
/// for a product codeword after every half pass and stopping early on one.
/// One iteration = a row pass plus a column pass.
DecodeResult min_sum_decode(const TernaryVector& received, const ProductCode& pc,
                            int max_iterations = kDefaultMaxIterations);

}  // namespace fsketch

#endif  // FSKETCH_MINSUM_HPP_
