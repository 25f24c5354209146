#ifndef FSKETCH_MATCHING_HPP_
#define FSKETCH_MATCHING_HPP_

#include <span>

#include "fsketch/bit_vector.hpp"
#include "fsketch/fraction.hpp"

namespace fsketch {

/// Relative Hamming distance restricted to the joint mask:
/// |(i1 ^ i2) & m1 & m2| / |m1 & m2|, mask bit 1 = reliable.
/// Throws std::domain_error when the joint mask is empty.
Fraction masked_relative_distance(const BitVector& i1, const BitVector& i2, const BitVector& m1,
                                  const BitVector& m2);

struct RotationScore {
  Fraction distance;
  int shift = 0;
};

/// Minimum masked distance over cyclic rotations of the second template (code
/// and mask rotate together). Ties break to the smallest |shift|, negative
/// sign first. Rotations whose joint mask is empty are skipped;
/// std::domain_error only if every rotation has an empty joint mask.
RotationScore rotated_best_distance(const BitVector& i1, const BitVector& m1, const BitVector& i2,
                                    const BitVector& m2, std::span<const int> rotation_set);

}  // namespace fsketch

#endif  // FSKETCH_MATCHING_HPP_
