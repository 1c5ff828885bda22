#include "sublat/gaussian.hpp"

#include <ostream>

#include "sublat/errors.hpp"

namespace sublat {

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw precondition_error("division by zero scalar");
  Rational n2 = o.norm2();
  GaussianRational num = *this * o.conj();
  re_ = num.re() / n2;
  im_ = num.im() / n2;
  return *this;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw precondition_error("inverse of zero scalar");
  Rational n2 = norm2();
  return {re_ / n2, -im_ / n2};
}

int GaussianRational::order_cmp(const GaussianRational& a,
                                const GaussianRational& b) {
  if (a.re_ < b.re_) return -1;
  if (b.re_ < a.re_) return 1;
  if (a.im_ < b.im_) return -1;
  if (b.im_ < a.im_) return 1;
  return 0;
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string s;
  if (!re_.is_zero()) s = re_.str();
  std::string im = im_.str();
  if (im == "1")
    im = "i";
  else if (im == "-1")
    im = "-i";
  else
    im += "i";
  if (!s.empty() && im[0] != '-') s += "+";
  return s + im;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << z.str();
}

}  // namespace sublat
