#include "sublat/rational.hpp"

#include <cctype>
#include <ostream>

#include "sublat/errors.hpp"

namespace sublat {

Rational::Rational(long num, long den) {
  if (den == 0) throw precondition_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw precondition_error("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw parse_error("empty rational literal");
  std::size_t slash = text.find('/');
  auto check_int = [&](const std::string& s) {
    if (s.empty()) throw parse_error("bad rational literal: " + text);
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw parse_error("bad rational literal: " + text);
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw parse_error("bad rational literal: " + text);
  };
  if (slash == std::string::npos) {
    check_int(text);
    return Rational(mpq_class(text, 10));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  check_int(num);
  check_int(den);
  mpq_class q(text, 10);
  if (q.get_den() == 0) throw parse_error("zero denominator: " + text);
  return Rational(q);
}

std::string Rational::str() const { return v_.get_str(); }

Rational Rational::inverse() const {
  if (is_zero()) throw precondition_error("inverse of zero rational");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(unsigned e) const {
  mpq_class acc(1);
  mpq_class base = v_;
  for (unsigned k = e; k; k >>= 1) {
    if (k & 1) acc *= base;
    base *= base;
  }
  return Rational(acc);
}

std::optional<Rational> Rational::sqrt_exact() const {
  if (sign() < 0) return std::nullopt;
  mpz_class num = v_.get_num(), den = v_.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(mpq_class(rn, rd));
}

std::optional<std::uint64_t> Rational::height64() const {
  mpz_class num = ::abs(mpz_class(v_.get_num()));
  mpz_class den = v_.get_den();
  if (!num.fits_ulong_p() || !den.fits_ulong_p()) return std::nullopt;
  unsigned long n = num.get_ui(), d = den.get_ui();
  return n > d ? n : d;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace sublat
