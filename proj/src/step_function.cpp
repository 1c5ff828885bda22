#include "sublat/step_function.hpp"

#include <algorithm>

#include "sublat/errors.hpp"

namespace sublat {

namespace {

// |coeff|^p as an exact rational. For even p this is norm2^(p/2); for odd
// p the constructor has guaranteed that norm2 is a perfect square.
Rational coeff_abs_pow(const GaussianRational& c, int p) {
  Rational n2 = c.norm2();
  if (p % 2 == 0) return n2.pow(static_cast<unsigned>(p / 2));
  auto root = n2.sqrt_exact();
  if (!root)
    throw invariant_error("odd-p token lost its rational modulus");
  return root->pow(static_cast<unsigned>(p));
}

}  // namespace

StepFunction::StepFunction(std::vector<Rational> cuts,
                           std::vector<ValueToken> values, int p)
    : p_(p) {
  if (p < 1) throw precondition_error("step function: p must be >= 1");
  if (values.size() != cuts.size() + 1)
    throw precondition_error("step function: need one value per segment");
  Rational zero(0), one(1);
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (!(zero < cuts[i] && cuts[i] < one))
      throw precondition_error("step function: cuts must lie inside (0,1)");
    if (i > 0 && !(cuts[i - 1] < cuts[i]))
      throw precondition_error("step function: cuts must increase");
  }
  for (auto& v : values) {
    if (!(v.radical > zero))
      throw precondition_error("step function: radicals must be positive");
    if (p == 1 && v.radical != one)
      throw precondition_error("step function: p = 1 tokens have radical 1");
    if (p % 2 == 1 && !v.coeff.norm2().sqrt_exact())
      throw precondition_error(
          "step function: odd p needs coefficients of rational modulus");
    if (v.coeff.is_zero()) v.radical = one;
  }
  // Canonical form: merge adjacent segments holding the same value.
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j > 0 && token_value_equal(values_.back(), values[j], p)) continue;
    if (j > 0) cuts_.push_back(cuts[j - 1]);
    values_.push_back(values[j]);
  }
}

const ValueToken& StepFunction::token_at(const Rational& x) const {
  if (x < Rational(0) || !(x < Rational(1)))
    throw precondition_error("step function: point outside [0,1)");
  std::size_t i = 0;
  while (i < cuts_.size() && !(x < cuts_[i])) ++i;
  return values_[i];
}

Rational StepFunction::norm_pow() const {
  Rational total(0), prev(0);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    Rational next = i < cuts_.size() ? cuts_[i] : Rational(1);
    total += coeff_abs_pow(values_[i].coeff, p_) * values_[i].radical *
             (next - prev);
    prev = next;
  }
  return total;
}

bool token_value_equal(const ValueToken& a, const ValueToken& b, int p) {
  if (a.coeff.is_zero() || b.coeff.is_zero())
    return a.coeff.is_zero() && b.coeff.is_zero();
  GaussianRational ratio = a.coeff / b.coeff;
  if (!ratio.is_real() || !(ratio.re() > Rational(0))) return false;
  return ratio.re().pow(static_cast<unsigned>(p)) * a.radical == b.radical;
}

bool step_equal(const StepFunction& f, const StepFunction& g) {
  if (f.p() != g.p())
    throw precondition_error("step functions live in different spaces");
  std::vector<Rational> cuts = f.cuts();
  cuts.insert(cuts.end(), g.cuts().begin(), g.cuts().end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  Rational prev(0);
  for (std::size_t i = 0; i <= cuts.size(); ++i) {
    if (!token_value_equal(f.token_at(prev), g.token_at(prev), f.p()))
      return false;
    if (i < cuts.size()) prev = cuts[i];
  }
  return true;
}

bool step_vanishes_from(const StepFunction& f, const Rational& t) {
  if (t < Rational(0) || t > Rational(1))
    throw precondition_error("nest cut must lie in [0,1]");
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    Rational upper = i < f.cuts().size() ? f.cuts()[i] : Rational(1);
    if (upper > t && !f.values()[i].coeff.is_zero()) return false;
  }
  return true;
}

StepFunction v_phi_apply(const PLBijection& phi, const StepFunction& f) {
  if (phi.lo() != Rational(0) || phi.hi() != Rational(1))
    throw precondition_error("transfer operator expects a bijection of [0,1]");
  PLBijection inv = pl_invert(phi);
  std::vector<Rational> grid;
  for (const auto& p : phi.breakpoints()) grid.push_back(p.first);
  for (const auto& c : f.cuts()) grid.push_back(inv.evaluate(c));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<Rational> cuts(grid.begin() + 1, grid.end() - 1);
  std::vector<ValueToken> values;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    Rational slope = (phi.evaluate(grid[i + 1]) - phi.evaluate(grid[i])) /
                     (grid[i + 1] - grid[i]);
    ValueToken t = f.token_at(phi.evaluate(grid[i]));
    if (f.p() == 1)
      t.coeff = t.coeff * GaussianRational(slope);
    else
      t.radical = t.radical * slope;
    values.push_back(std::move(t));
  }
  return StepFunction(std::move(cuts), std::move(values), f.p());
}

}  // namespace sublat
