#include "fsketch/interleaver.hpp"

#include <stdexcept>

#include "fsketch/rng.hpp"

namespace fsketch {

Interleaver::Interleaver(std::vector<std::uint32_t> forward) : forward_(std::move(forward)) {
  backward_.resize(forward_.size());
  std::vector<bool> seen(forward_.size(), false);
  for (std::size_t t = 0; t < forward_.size(); ++t) {
    const std::uint32_t c = forward_[t];
    if (c >= forward_.size() || seen[c])
      throw std::invalid_argument("Interleaver: not a permutation");
    seen[c] = true;
    backward_[c] = static_cast<std::uint32_t>(t);
  }
}

Interleaver Interleaver::from_seed(std::uint64_t seed, std::size_t n) {
  std::vector<std::uint32_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint32_t>(i);
  Rng rng(seed);
  rng.shuffle(perm);
  return Interleaver(std::move(perm));
}

Interleaver Interleaver::identity(std::size_t n) {
  std::vector<std::uint32_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint32_t>(i);
  return Interleaver(std::move(perm));
}

BitVector Interleaver::apply(const BitVector& v) const {
  if (v.size() != size()) throw std::invalid_argument("Interleaver::apply: length mismatch");
  BitVector out(size());
  for (std::size_t t = 0; t < size(); ++t) {
    if (v.get(t)) out.set(forward_[t], true);
  }
  return out;
}

BitVector Interleaver::invert(const BitVector& v) const {
  if (v.size() != size()) throw std::invalid_argument("Interleaver::invert: length mismatch");
  BitVector out(size());
  for (std::size_t t = 0; t < size(); ++t) {
    if (v.get(forward_[t])) out.set(t, true);
  }
  return out;
}

}  // namespace fsketch
