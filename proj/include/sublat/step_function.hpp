#ifndef SUBLAT_STEP_FUNCTION_HPP
#define SUBLAT_STEP_FUNCTION_HPP

#include <vector>

#include "sublat/gaussian.hpp"
#include "sublat/pl.hpp"
#include "sublat/rational.hpp"

namespace sublat {

/// Segment value coeff * radical^(1/p) with radical a positive rational.
/// The radical token keeps p-th roots exact: norms are always compared on
/// p-th powers, where the token collapses to a rational.
struct ValueToken {
  GaussianRational coeff;
  Rational radical = Rational(1);

  friend bool operator==(const ValueToken&, const ValueToken&) = default;
};

/// Step function on [0, 1] with rational cut points; segment i is the
/// half-open interval [cut_i, cut_{i+1}) with cut_0 = 0 and the last cut
/// = 1 implied. Values carry radical tokens so that the image under a
/// slope-reweighted composition stays in the class.
///
/// Canonical form: zero coefficients carry radical 1, and adjacent
/// segments holding the same value are merged. When p = 1 every radical
/// must be 1 (tokens are plain coefficients). When p is odd, every
/// coefficient must have a rational modulus (perfect-square norm), which
/// keeps the p-norm of the function an exact rational; the class is
/// closed under the transfer operator below.
class StepFunction {
public:
  StepFunction(std::vector<Rational> cuts, std::vector<ValueToken> values,
               int p);

  int p() const { return p_; }
  const std::vector<Rational>& cuts() const { return cuts_; }
  const std::vector<ValueToken>& values() const { return values_; }

  /// Token on the segment containing x (0 <= x < 1).
  const ValueToken& token_at(const Rational& x) const;

  /// p-th power of the p-norm, an exact rational:
  /// sum over segments of |coeff|^p * radical * length.
  Rational norm_pow() const;

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

private:
  std::vector<Rational> cuts_;
  std::vector<ValueToken> values_;
  int p_;
};

/// Whether two tokens denote the same scalar coeff * radical^(1/p):
/// true iff the coefficient ratio is a positive rational rho with
/// rho^p * radical_a = radical_b.
bool token_value_equal(const ValueToken& a, const ValueToken& b, int p);

/// Pointwise equality as functions (common refinement, tokens compared by
/// value). Both sides must share the same p.
bool step_equal(const StepFunction& f, const StepFunction& g);

/// Whether f vanishes on [t, 1): membership of f in the nest subspace
/// with cut parameter t.
bool step_vanishes_from(const StepFunction& f, const Rational& t);

/// Transfer operator of an increasing piecewise-linear bijection phi of
/// [0, 1]: f maps to slope^(1/p) * (f composed with phi), computed exactly
/// on the common refinement of the cuts of f pulled back through phi and
/// the breakpoints of phi. An exact isometry: norm_pow is preserved, and
/// the operator for the inverse bijection inverts it.
StepFunction v_phi_apply(const PLBijection& phi, const StepFunction& f);

}  // namespace sublat

#endif
