#ifndef SUBLAT_RATIONAL_HPP
#define SUBLAT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace sublat {

/// Exact rational scalar. Always stored reduced with positive denominator
/// (GMP's canonical form). Serializes as "p/q", with "/q" omitted when the
/// denominator is 1. Equality is literal; there are no tolerances anywhere
/// in this library.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<long>(n)) {}
  Rational(long num, long den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "p", "p/q", or a decimal-free integer string. Throws
  /// parse_error on malformed text or zero denominator.
  static Rational parse(const std::string& text);

  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational inverse() const;
  Rational pow(unsigned e) const;

  /// Exact square root if this is a perfect square of a rational.
  std::optional<Rational> sqrt_exact() const;

  /// Max of |numerator| and denominator, when both fit in 64 bits; used
  /// only by samplers and reports, never by arithmetic.
  std::optional<std::uint64_t> height64() const;

  const mpq_class& raw() const { return v_; }

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace sublat

#endif
