#ifndef FSKETCH_DIGEST_HPP_
#define FSKETCH_DIGEST_HPP_

#include <cstdint>
#include <vector>

#include "fsketch/bit_vector.hpp"

namespace fsketch {

/// Registered digest algorithm ids.
inline constexpr std::uint8_t kDigestSha256 = 0x01;

/// Digest size in bytes for an algorithm id; throws std::invalid_argument on
/// an unknown id.
std::size_t digest_length(std::uint8_t algorithm_id);

/// One-way digest of a word, taken over its MSB-first byte packing.
std::vector<std::uint8_t> digest(const BitVector& word,
                                 std::uint8_t algorithm_id = kDigestSha256);

}  // namespace fsketch

#endif  // FSKETCH_DIGEST_HPP_
