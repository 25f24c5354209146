#ifndef FSKETCH_BIT_VECTOR_HPP_
#define FSKETCH_BIT_VECTOR_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fsketch {

/// Fixed-length vector over {0,1}. Length is set at construction and never
/// changes; XOR/AND/OR and Hamming distance are defined for equal lengths
/// only. Serialization convention everywhere in this project: bit i lives in
/// byte i/8 at bit position 7-(i%8), i.e. coordinate 0 is the most
/// significant bit of byte 0.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  /// Parse "0101..."; index 0 is the first character.
  static BitVector from_string(std::string_view bits);
  /// Unpack n bits from MSB-first bytes.
  static BitVector from_bytes(std::span<const std::uint8_t> bytes, std::size_t n);
  static BitVector from_hex(std::string_view hex, std::size_t n);

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i, bool v) {
    const std::uint64_t m = std::uint64_t(1) << (i & 63);
    if (v)
      words_[i >> 6] |= m;
    else
      words_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  std::size_t popcount() const;

  /// Cyclic rotation: rotated(s).get(i) == get((i - s) mod n), so a positive
  /// shift moves contents toward higher indices.
  BitVector rotated(long shift) const;

  std::vector<std::uint8_t> to_bytes() const;
  std::string to_hex() const;
  std::string to_string() const;

  friend BitVector operator^(const BitVector& a, const BitVector& b);
  friend BitVector operator&(const BitVector& a, const BitVector& b);
  friend BitVector operator|(const BitVector& a, const BitVector& b);

  bool operator==(const BitVector&) const = default;

 private:
  void check_same_length(const BitVector& other) const;

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

std::size_t hamming_distance(const BitVector& a, const BitVector& b);

enum class Trit : std::uint8_t { zero = 0, one = 1, erased = 2 };

/// Vector over {0, 1, erased}: erasures are explicit symbols, not a side
/// mask.
class TernaryVector {
 public:
  TernaryVector() = default;
  explicit TernaryVector(std::size_t n, Trit fill = Trit::zero) : symbols_(n, fill) {}

  /// All symbols known, taken from the bit vector.
  static TernaryVector from_bits(const BitVector& bits);
  /// Parse "01?10"; '?' marks an erasure.
  static TernaryVector from_string(std::string_view s);

  std::size_t size() const { return symbols_.size(); }
  Trit get(std::size_t i) const { return symbols_[i]; }
  void set(std::size_t i, Trit t) { symbols_[i] = t; }

  std::size_t erased_count() const;
  bool has_erasures() const { return erased_count() > 0; }

  /// Known symbols as bits; throws if any position is erased.
  BitVector to_bits() const;

  std::string to_string() const;

  bool operator==(const TernaryVector&) const = default;

 private:
  std::vector<Trit> symbols_;
};

}  // namespace fsketch

#endif  // FSKETCH_BIT_VECTOR_HPP_
