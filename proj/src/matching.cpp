#include "fsketch/matching.hpp"

#include <cstdlib>
#include <stdexcept>

namespace fsketch {

Fraction masked_relative_distance(const BitVector& i1, const BitVector& i2, const BitVector& m1,
                                  const BitVector& m2) {
  if (i1.size() != i2.size() || i1.size() != m1.size() || i1.size() != m2.size())
    throw std::invalid_argument("masked_relative_distance: length mismatch");
  const BitVector joint = m1 & m2;
  const std::size_t overlap = joint.popcount();
  if (overlap == 0) throw std::domain_error("masked_relative_distance: empty joint mask");
  const std::size_t mismatches = ((i1 ^ i2) & joint).popcount();
  return Fraction(static_cast<std::int64_t>(mismatches), static_cast<std::int64_t>(overlap));
}

RotationScore rotated_best_distance(const BitVector& i1, const BitVector& m1, const BitVector& i2,
                                    const BitVector& m2, std::span<const int> rotation_set) {
  if (rotation_set.empty())
    throw std::invalid_argument("rotated_best_distance: empty rotation set");

  bool have_best = false;
  RotationScore best;
  for (int s : rotation_set) {
    const BitVector joint = m1 & m2.rotated(s);
    if (joint.popcount() == 0) continue;
    const Fraction d = masked_relative_distance(i1, i2.rotated(s), m1, m2.rotated(s));
    // Order: distance, then |shift|, then shift (negative first).
    const bool better =
        !have_best || d < best.distance ||
        (d == best.distance && (std::abs(s) < std::abs(best.shift) ||
                                (std::abs(s) == std::abs(best.shift) && s < best.shift)));
    if (better) {
      best = RotationScore{d, s};
      have_best = true;
    }
  }
  if (!have_best)
    throw std::domain_error("rotated_best_distance: empty joint mask at every rotation");
  return best;
}

}  // namespace fsketch
