#ifndef FSKETCH_FRACTION_HPP_
#define FSKETCH_FRACTION_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fsketch {

/// Exact nonnegative ratio of counts. Kept unreduced so that num/den still
/// read as "hits out of trials"; comparisons cross-multiply and never touch
/// floating point.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction() = default;
  Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (d <= 0 || n < 0) throw std::invalid_argument("Fraction: need num >= 0, den > 0");
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
  friend bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
  friend bool operator>=(const Fraction& a, const Fraction& b) { return !(a < b); }
};

}  // namespace fsketch

#endif  // FSKETCH_FRACTION_HPP_
