#include "sublat/nests.hpp"

#include <utility>
#include <vector>

#include "sublat/errors.hpp"

namespace sublat {

bool shift_one_sided_test(ShiftFamily family, long long s) {
  if (family == ShiftFamily::full_z) return true;
  // Node k (k >= 0) maps to node k + s, a member iff k + s >= 0 for all
  // k >= 0, that is iff s >= 0.
  return s >= 0;
}

bool shift_collineation_test(ShiftFamily family, long long s) {
  return shift_one_sided_test(family, s) &&
         shift_one_sided_test(family, -s);
}

ShiftFactorization shift_decompose(long long s_index) {
  ShiftFactorization f{s_index, 0};
  if (f.residual_shift + f.w_power != s_index)
    throw invariant_error("shift factorization does not recompose");
  return f;
}

namespace {

// Restriction of f to [a, b]; both endpoints must be fixed points.
PLBijection pl_restrict(const PLBijection& f, const Rational& a,
                        const Rational& b) {
  if (f.evaluate(a) != a || f.evaluate(b) != b)
    throw precondition_error("pl restriction needs fixed endpoints");
  std::vector<std::pair<Rational, Rational>> pts;
  pts.emplace_back(a, a);
  for (const auto& p : f.breakpoints())
    if (a < p.first && p.first < b) pts.push_back(p);
  pts.emplace_back(b, b);
  return PLBijection(a, b, std::move(pts));
}

// Conjugation by negation: x -> -f(-x), carrying [-b,-a] onto [a,b].
PLBijection pl_negate_conjugate(const PLBijection& f) {
  std::vector<std::pair<Rational, Rational>> pts;
  const auto& src = f.breakpoints();
  for (auto it = src.rbegin(); it != src.rend(); ++it)
    pts.emplace_back(-it->first, -it->second);
  return PLBijection(-f.hi(), -f.lo(), std::move(pts));
}

void check_theta_pair(const DecreasingPL& theta1, const PLBijection& theta2) {
  if (!theta1.negated)
    throw precondition_error("theta1 must use the negated representation");
  Rational zero(0), one(1);
  if (theta1.increasing.lo() != zero || theta1.increasing.hi() != one ||
      theta2.lo() != zero || theta2.hi() != one)
    throw precondition_error("reparametrizations must be bijections of [0,1]");
}

}  // namespace

bool gamma_theta_membership(const PLBijection& phi, const DecreasingPL& theta1,
                            const PLBijection& theta2) {
  check_theta_pair(theta1, theta2);
  Rational one(1);
  if (phi.lo() != -one || phi.hi() != one)
    throw precondition_error("phi must be a bijection of [-1,1]");
  if (!phi.evaluate(Rational(0)).is_zero()) return false;
  // theta1(t) = -g(t), so theta1^-1 . phi . theta1 = g^-1 . h . g with
  // h(x) = -phi(-x), the reflection of phi's left half into [0,1].
  PLBijection h = pl_negate_conjugate(pl_restrict(phi, -one, Rational(0)));
  PLBijection phi_plus = pl_restrict(phi, Rational(0), one);
  const PLBijection& g = theta1.increasing;
  PLBijection lhs = pl_compose(pl_invert(g), pl_compose(h, g));
  PLBijection rhs =
      pl_compose(pl_invert(theta2), pl_compose(phi_plus, theta2));
  return lhs == rhs;
}

PLBijection two_sided_cut_action(const PLBijection& phi,
                                 const DecreasingPL& theta1,
                                 const PLBijection& theta2) {
  if (!gamma_theta_membership(phi, theta1, theta2))
    throw precondition_error("phi is not a symmetry of the two-sided nest");
  PLBijection phi_plus = pl_restrict(phi, Rational(0), Rational(1));
  return pl_compose(pl_invert(theta2),
                    pl_compose(pl_invert(phi_plus), theta2));
}

Rational volterra_nest_action(const PLBijection& phi, const Rational& t) {
  if (phi.lo() != Rational(0) || phi.hi() != Rational(1))
    throw precondition_error("nest action expects a bijection of [0,1]");
  if (t < Rational(0) || t > Rational(1))
    throw precondition_error("nest cut must lie in [0,1]");
  return pl_invert(phi).evaluate(t);
}

VolterraFactorization volterra_decompose(const PLBijection& action) {
  if (action.lo() != Rational(0) || action.hi() != Rational(1))
    throw precondition_error("cut action must be a bijection of [0,1]");
  PLBijection v_param = pl_invert(action);
  // The complement's cut action is v_param^-1 = action; undoing it after
  // the input leaves the node-fixing factor.
  PLBijection residual = pl_compose(action, v_param);
  if (!residual.is_identity())
    throw invariant_error("node-fixing factor moved a cut");
  return {std::move(v_param), std::move(residual)};
}

PLBijection cantor_psi_approx(int depth) {
  if (depth < 0) throw precondition_error("depth must be >= 0");
  using Pt = std::pair<Rational, Rational>;
  Rational half(1, 2), third(1, 3);
  std::vector<Pt> c{{Rational(0), Rational(0)}, {Rational(1), Rational(1)}};
  for (int n = 0; n < depth; ++n) {
    std::vector<Pt> next;
    for (const auto& p : c)
      next.emplace_back(p.first * third, p.second * half);
    next.emplace_back(Rational(2, 3), half);
    for (const auto& p : c) {
      Pt q{(p.first + Rational(2)) * third, (p.second + Rational(1)) * half};
      if (q != next.back()) next.push_back(std::move(q));
    }
    c = std::move(next);
  }
  std::vector<Pt> pts;
  pts.reserve(c.size());
  for (const auto& p : c)
    pts.emplace_back(p.first, (p.first + p.second) * half);
  return PLBijection(Rational(0), Rational(1), std::move(pts));
}

bool nest_q_restriction_test(const PLBijection& phi) {
  // Constructive for this representation: breakpoints are rational, so on
  // each segment phi and phi^-1 act by affine maps with rational
  // coefficients and rational cuts stay rational in both directions.
  (void)phi;
  return true;
}

}  // namespace sublat
