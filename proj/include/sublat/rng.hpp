#ifndef SUBLAT_RNG_HPP
#define SUBLAT_RNG_HPP

#include <cstdint>

#include "sublat/gaussian.hpp"

namespace sublat {

/// 64-bit linear congruential generator, multiplier 6364136223846793005 and
/// increment 1442695040888963407 (Knuth's MMIX constants). Values are taken
/// from the high 32 bits. Every sampler in the library and in the test
/// suites draws from this, so a seed reproduces a run bit for bit.
class Lcg64 {
public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
    return state_;
  }

  std::uint32_t next_u32() {
    return static_cast<std::uint32_t>(next_u64() >> 32);
  }

  /// Uniform in [0, bound); bound must be positive.
  std::uint32_t below(std::uint32_t bound) { return next_u32() % bound; }

  /// Uniform integer in [lo, hi] inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint32_t>(hi - lo + 1)));
  }

  /// Rational p/q with |p| <= height, 1 <= q <= height.
  Rational rational(long height) {
    return Rational(range(-height, height), range(1, height));
  }

  /// Nonzero rational of the same height bound.
  Rational nonzero_rational(long height) {
    for (;;) {
      Rational r = rational(height);
      if (!r.is_zero()) return r;
    }
  }

  GaussianRational gaussian(long height) {
    return {rational(height), rational(height)};
  }

private:
  std::uint64_t state_;
};

}  // namespace sublat

#endif
