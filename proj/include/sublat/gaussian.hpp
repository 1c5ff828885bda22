#ifndef SUBLAT_GAUSSIAN_HPP
#define SUBLAT_GAUSSIAN_HPP

#include <iosfwd>
#include <string>

#include "sublat/rational.hpp"

namespace sublat {

/// Element of Q(i): exact complex scalar with rational real and imaginary
/// parts. The scalar field for every matrix and subspace in this library.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}
  GaussianRational(long n) : re_(n) {}
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }

  /// Squared modulus re^2 + im^2; always an exact rational.
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a,
                                    const GaussianRational& b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a,
                                    const GaussianRational& b) {
    return a -= b;
  }
  friend GaussianRational operator*(GaussianRational a,
                                    const GaussianRational& b) {
    return a *= b;
  }
  friend GaussianRational operator/(GaussianRational a,
                                    const GaussianRational& b) {
    return a /= b;
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  GaussianRational inverse() const;

  /// Not an algebraic order; lexicographic on (re, im), used only to make
  /// canonical sorts deterministic.
  static int order_cmp(const GaussianRational& a, const GaussianRational& b);

  /// Human-readable form "a+bi" used in reports and DOT labels.
  std::string str() const;

private:
  Rational re_, im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace sublat

#endif
