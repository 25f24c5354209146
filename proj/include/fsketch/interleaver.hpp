#ifndef FSKETCH_INTERLEAVER_HPP_
#define FSKETCH_INTERLEAVER_HPP_

#include <cstdint>
#include <vector>

#include "fsketch/bit_vector.hpp"

namespace fsketch {

/// Seeded bit permutation between template positions and code coordinates.
/// The permutation is the Fisher-Yates shuffle of 0..n-1 driven by
/// Rng(seed) (see rng.hpp), so a seed fully determines it on any platform.
class Interleaver {
 public:
  static Interleaver from_seed(std::uint64_t seed, std::size_t n);
  static Interleaver identity(std::size_t n);

  std::size_t size() const { return forward_.size(); }

  /// Template position -> code coordinate.
  std::size_t map(std::size_t template_pos) const { return forward_[template_pos]; }
  /// Code coordinate -> template position.
  std::size_t inverse(std::size_t code_coord) const { return backward_[code_coord]; }

  /// out[map(t)] = v[t]
  BitVector apply(const BitVector& v) const;
  /// out[t] = v[map(t)]
  BitVector invert(const BitVector& v) const;

 private:
  explicit Interleaver(std::vector<std::uint32_t> forward);

  std::vector<std::uint32_t> forward_;
  std::vector<std::uint32_t> backward_;
};

}  // namespace fsketch

#endif  // FSKETCH_INTERLEAVER_HPP_
