#ifndef SUBLAT_TESTS_HELPERS_HPP
#define SUBLAT_TESTS_HELPERS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "sublat/algebra.hpp"
#include "sublat/matrix.hpp"
#include "sublat/rational.hpp"
#include "sublat/subspace.hpp"

namespace sublat::testutil {

inline Rational q(long num, long den = 1) { return Rational(num, den); }

inline GaussianRational g(long n) { return GaussianRational(n); }

inline GaussianRational gq(long num, long den) {
  return GaussianRational(Rational(num, den));
}

inline GaussianRational gim(long re, long im) {
  return GaussianRational(Rational(re), Rational(im));
}

inline Matrix mat(std::size_t rows, std::size_t cols,
                  const std::vector<long>& v) {
  std::vector<GaussianRational> e;
  e.reserve(v.size());
  for (long x : v) e.emplace_back(x);
  return Matrix(rows, cols, std::move(e));
}

inline Matrix colv(const std::vector<long>& v) {
  std::vector<GaussianRational> e;
  e.reserve(v.size());
  for (long x : v) e.emplace_back(x);
  return Matrix::column(e);
}

/// Span of one integer column; ambient dimension taken from its length.
inline Subspace line(const std::vector<long>& v) {
  std::vector<GaussianRational> e;
  e.reserve(v.size());
  for (long x : v) e.emplace_back(x);
  return Subspace::span_column(e);
}

/// Deterministic sampler. mt19937_64 output is pinned by the standard and
/// ranges are reduced by plain modulo, so every platform draws the same
/// sequence for a given seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t u64() { return eng_(); }

  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(
                    eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool coin() { return (eng_() & 1) != 0; }

  /// Rational of height at most h: numerator in [-h, h], denominator in
  /// [1, h].
  Rational rational(long h) {
    return Rational(range(-h, h), range(1, h));
  }

  Rational nonzero_rational(long h) {
    for (;;) {
      Rational r = rational(h);
      if (!r.is_zero()) return r;
    }
  }

  GaussianRational gaussian(long h, bool with_imag = true) {
    return GaussianRational(rational(h),
                            with_imag ? rational(h) : Rational(0));
  }

  Matrix matrix(std::size_t rows, std::size_t cols, long h,
                bool with_imag = true) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        m.at(r, c) = gaussian(h, with_imag);
    return m;
  }

  Matrix invertible(std::size_t n, long h, bool with_imag = true) {
    for (;;) {
      Matrix m = matrix(n, n, h, with_imag);
      if (m.invertible()) return m;
    }
  }

 private:
  std::mt19937_64 eng_;
};

/// Random invertible element of the linear span of an algebra basis. For
/// a unital matrix algebra the inverse is again inside (the minimal
/// polynomial of an invertible element has nonzero constant term), so the
/// result lies in Grp of the algebra and fixes every invariant subspace.
inline Matrix invertible_in_span(const OperatorAlgebra& alg, Sampler& s,
                                 long h = 3) {
  for (;;) {
    Matrix acc(alg.ambient(), alg.ambient());
    for (const Matrix& b : alg.basis())
      acc += GaussianRational(s.rational(h)) * b;
    if (acc.invertible()) return acc;
  }
}

}  // namespace sublat::testutil

#endif
