#include "fsketch/bit_vector.hpp"

#include <bit>
#include <stdexcept>

namespace fsketch {

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw std::invalid_argument(std::string("invalid hex digit '") + c + "'");
}

}  // namespace

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i, true);
    else if (bits[i] != '0')
      throw std::invalid_argument("BitVector::from_string: expected only '0'/'1'");
  }
  return v;
}

BitVector BitVector::from_bytes(std::span<const std::uint8_t> bytes, std::size_t n) {
  if (bytes.size() * 8 < n) throw std::invalid_argument("BitVector::from_bytes: too few bytes");
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if ((bytes[i / 8] >> (7 - (i % 8))) & 1) v.set(i, true);
  }
  return v;
}

BitVector BitVector::from_hex(std::string_view hex, std::size_t n) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("BitVector::from_hex: odd digit count");
  std::vector<std::uint8_t> bytes(hex.size() / 2);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    bytes[i] = static_cast<std::uint8_t>(hex_digit(hex[2 * i]) * 16 + hex_digit(hex[2 * i + 1]));
  }
  return from_bytes(bytes, n);
}

std::size_t BitVector::popcount() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

BitVector BitVector::rotated(long shift) const {
  if (size_ == 0) return *this;
  const long n = static_cast<long>(size_);
  long s = shift % n;
  if (s < 0) s += n;
  BitVector out(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    const std::size_t src = (i + size_ - static_cast<std::size_t>(s)) % size_;
    if (get(src)) out.set(i, true);
  }
  return out;
}

std::vector<std::uint8_t> BitVector::to_bytes() const {
  std::vector<std::uint8_t> bytes((size_ + 7) / 8, 0);
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) bytes[i / 8] |= static_cast<std::uint8_t>(1u << (7 - (i % 8)));
  }
  return bytes;
}

std::string BitVector::to_hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (std::uint8_t b : to_bytes()) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

void BitVector::check_same_length(const BitVector& other) const {
  if (size_ != other.size_) throw std::invalid_argument("BitVector: length mismatch");
}

BitVector operator^(const BitVector& a, const BitVector& b) {
  a.check_same_length(b);
  BitVector out(a.size_);
  for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] = a.words_[i] ^ b.words_[i];
  return out;
}

BitVector operator&(const BitVector& a, const BitVector& b) {
  a.check_same_length(b);
  BitVector out(a.size_);
  for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] = a.words_[i] & b.words_[i];
  return out;
}

BitVector operator|(const BitVector& a, const BitVector& b) {
  a.check_same_length(b);
  BitVector out(a.size_);
  for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] = a.words_[i] | b.words_[i];
  return out;
}

std::size_t hamming_distance(const BitVector& a, const BitVector& b) {
  return (a ^ b).popcount();
}

TernaryVector TernaryVector::from_bits(const BitVector& bits) {
  TernaryVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    v.symbols_[i] = bits.get(i) ? Trit::one : Trit::zero;
  }
  return v;
}

TernaryVector TernaryVector::from_string(std::string_view s) {
  TernaryVector v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    switch (s[i]) {
      case '0': v.symbols_[i] = Trit::zero; break;
      case '1': v.symbols_[i] = Trit::one; break;
      case '?': v.symbols_[i] = Trit::erased; break;
      default: throw std::invalid_argument("TernaryVector::from_string: expected '0'/'1'/'?'");
    }
  }
  return v;
}

std::size_t TernaryVector::erased_count() const {
  std::size_t n = 0;
  for (Trit t : symbols_)
    if (t == Trit::erased) ++n;
  return n;
}

BitVector TernaryVector::to_bits() const {
  BitVector out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (symbols_[i] == Trit::erased) throw std::domain_error("TernaryVector::to_bits: erased symbol");
    if (symbols_[i] == Trit::one) out.set(i, true);
  }
  return out;
}

std::string TernaryVector::to_string() const {
  std::string s(size(), '?');
  for (std::size_t i = 0; i < size(); ++i) {
    if (symbols_[i] == Trit::zero) s[i] = '0';
    if (symbols_[i] == Trit::one) s[i] = '1';
  }
  return s;
}

}  // namespace fsketch
