#include "fsketch/minsum.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace fsketch {

CostTable CostTable::transposed() const {
  CostTable out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out.set(j, i, cost0(i, j), cost1(i, j));
    }
  }
  return out;
}

CostTable init_costs(const TernaryVector& received, const ProductCode& pc) {
  if (received.size() != pc.length())
    throw std::invalid_argument("init_costs: received length must be the code length");
  CostTable t(pc.column_length(), pc.row_length());
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) {
      switch (received.get(i * t.cols() + j)) {
        case Trit::zero: t.set(i, j, 0, 1); break;
        case Trit::one: t.set(i, j, 1, 0); break;
        case Trit::erased: t.set(i, j, 0, 0); break;
      }
    }
  }
  return t;
}

namespace {

// Exact min-sum pass along the rows of `in` using `code` (whose length is
// in.cols()). Codewords come in complement pairs (message u and u^1), so only
// half the table needs summing: cost(~c) = total - cost(c).
CostTable line_pass(const CostTable& in, const ReedMullerCode& code) {
  const std::size_t n = in.cols();
  const std::size_t lines = in.rows();
  const std::size_t ncw = code.codewords().size();
  const std::uint8_t* cw = code.codeword_bytes().data();

  constexpr Cost kSentinel = std::numeric_limits<Cost>::max() / 4;
  CostTable out(lines, n);
  std::vector<Cost> best0(n), best1(n);

  for (std::size_t l = 0; l < lines; ++l) {
    const Cost* a0 = in.plane0().data() + l * n;
    const Cost* a1 = in.plane1().data() + l * n;

    Cost total = 0;
    for (std::size_t j = 0; j < n; ++j) total += a0[j] + a1[j];

    std::fill(best0.begin(), best0.end(), kSentinel);
    std::fill(best1.begin(), best1.end(), kSentinel);

    for (std::size_t u = 0; u < ncw; u += 2) {
      const std::uint8_t* c = cw + u * n;
      Cost s = 0;
      for (std::size_t j = 0; j < n; ++j) s += a0[j] + Cost(c[j]) * (a1[j] - a0[j]);
      const Cost sc = total - s;  // cost of the complement codeword
      const Cost d = sc - s;
      for (std::size_t j = 0; j < n; ++j) {
        const Cost v0 = s + Cost(c[j]) * d;  // c_j = 1 picks the complement
        const Cost v1 = sc - Cost(c[j]) * d;
        best0[j] = std::min(best0[j], v0);
        best1[j] = std::min(best1[j], v1);
      }
    }

    Cost* o0 = out.plane0().data() + l * n;
    Cost* o1 = out.plane1().data() + l * n;
    for (std::size_t j = 0; j < n; ++j) {
      const Cost m = std::min(best0[j], best1[j]);
      o0[j] = std::min(best0[j] - m, kCostCeiling);
      o1[j] = std::min(best1[j] - m, kCostCeiling);
    }
  }
  return out;
}

void check_grid(const CostTable& in, const ProductCode& pc, const char* where) {
  if (in.rows() != pc.column_length() || in.cols() != pc.row_length())
    throw std::invalid_argument(std::string(where) + ": cost grid does not match the code");
}

bool is_complete_codeword(const TernaryVector& word, const ProductCode& pc) {
  return pc.contains(word);
}

}  // namespace

CostTable row_iteration(const CostTable& in, const ProductCode& pc) {
  check_grid(in, pc, "row_iteration");
  return line_pass(in, pc.row_code());
}

CostTable column_iteration(const CostTable& in, const ProductCode& pc) {
  check_grid(in, pc, "column_iteration");
  return line_pass(in.transposed(), pc.col_code()).transposed();
}

TernaryVector hard_decision(const CostTable& costs) {
  TernaryVector out(costs.rows() * costs.cols());
  const std::span<const Cost> p0 = costs.plane0();
  const std::span<const Cost> p1 = costs.plane1();
  for (std::size_t i = 0; i < p0.size(); ++i) {
    if (p0[i] < p1[i])
      out.set(i, Trit::zero);
    else if (p1[i] < p0[i])
      out.set(i, Trit::one);
    else
      out.set(i, Trit::erased);
  }
  return out;
}

const char* to_string(DecodeStatus s) {
  switch (s) {
    case DecodeStatus::kCodeword: return "codeword";
    case DecodeStatus::kUndecided: return "undecided";
    case DecodeStatus::kMaxIterations: return "max_iterations";
  }
  return "unknown";
}

DecodeResult min_sum_decode(const TernaryVector& received, const ProductCode& pc,
                            int max_iterations) {
  if (max_iterations < 1) throw std::invalid_argument("min_sum_decode: max_iterations must be >= 1");
  if (received.size() != pc.length())
    throw std::invalid_argument("min_sum_decode: received length must be the code length");

  if (!received.has_erasures() && is_complete_codeword(received, pc)) {
    return DecodeResult{DecodeStatus::kCodeword, received, 0};
  }

  CostTable costs = init_costs(received, pc);
  // States after the two previous full iterations, for cycle detection.
  CostTable prev1, prev2;

  for (int it = 1; it <= max_iterations; ++it) {
    costs = row_iteration(costs, pc);
    TernaryVector hd = hard_decision(costs);
    if (is_complete_codeword(hd, pc)) return DecodeResult{DecodeStatus::kCodeword, hd, it};

    costs = column_iteration(costs, pc);
    hd = hard_decision(costs);
    if (is_complete_codeword(hd, pc)) return DecodeResult{DecodeStatus::kCodeword, hd, it};

    // The pass is a deterministic map, so once the state repeats with period
    // one or two the remaining iterations are fully determined; jump straight
    // to the state the full budget would have produced. Every state in the
    // cycle already failed its codeword check above.
    if (costs == prev1) break;
    if (costs == prev2) {
      if ((max_iterations - it) % 2 != 0) costs = prev1;
      break;
    }
    prev2 = std::move(prev1);
    prev1 = costs;
  }

  TernaryVector hd = hard_decision(costs);
  const DecodeStatus status =
      hd.has_erasures() ? DecodeStatus::kUndecided : DecodeStatus::kMaxIterations;
  return DecodeResult{status, hd, max_iterations};
}

}  // namespace fsketch
