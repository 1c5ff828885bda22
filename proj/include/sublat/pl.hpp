#ifndef SUBLAT_PL_HPP
#define SUBLAT_PL_HPP

#include <utility>
#include <vector>

#include "sublat/rational.hpp"

namespace sublat {

/// Increasing piecewise-linear bijection of a rational interval onto
/// itself. Canonical form: breakpoints (x, y) strictly increasing in both
/// coordinates, endpoints fixed (lo maps to lo, hi to hi), no collinear
/// interior point kept. Strict monotonicity means every segment slope is
/// positive, so the inverse is of the same kind and composition stays in
/// the class; group laws hold exactly on canonical forms.
class PLBijection {
public:
  /// Throws precondition_error unless the points describe an increasing
  /// bijection of [lo, hi] onto itself with the endpoints fixed.
  PLBijection(Rational lo, Rational hi,
              std::vector<std::pair<Rational, Rational>> points);

  static PLBijection identity(const Rational& lo, const Rational& hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  const std::vector<std::pair<Rational, Rational>>& breakpoints() const {
    return points_;
  }

  /// Exact value by linear interpolation. Throws precondition_error when
  /// x lies outside the interval.
  Rational evaluate(const Rational& x) const;

  bool is_identity() const { return points_.size() == 2; }

  friend bool operator==(const PLBijection& a, const PLBijection& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.points_ == b.points_;
  }

private:
  Rational lo_, hi_;
  std::vector<std::pair<Rational, Rational>> points_;
};

/// f after g, computed exactly on the merged breakpoints. Both functions
/// must live on the same interval.
PLBijection pl_compose(const PLBijection& f, const PLBijection& g);

/// Inverse bijection: breakpoints with coordinates swapped.
PLBijection pl_invert(const PLBijection& f);

}  // namespace sublat

#endif
