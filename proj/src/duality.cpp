#include "sublat/duality.hpp"

#include "sublat/algebra.hpp"
#include "sublat/collineation.hpp"
#include "sublat/errors.hpp"

namespace sublat {

SubspaceLattice perp_family(const SubspaceLattice& l) { return l.dual(); }

bool adjoint_is_collineation(const SubspaceLattice& l, const Matrix& s) {
  if (!is_collineation(l, s))
    throw precondition_error("adjoint check expects a collineation of l");
  SubspaceLattice dual = l.dual();
  Matrix st = s.transpose();
  if (!is_collineation(dual, st)) return false;
  Matrix si = *s.inverse();
  for (const auto& m : l.nodes()) {
    Subspace lhs = m.annihilator().map(st);
    Subspace rhs = Subspace(l.ambient(), si * m.basis()).annihilator();
    if (!(lhs == rhs)) return false;
  }
  return true;
}

DualFactorization semidirect_transfer(const SubspaceLattice& l,
                                      const Matrix& a, const Matrix& v) {
  if (!fixes_every_member(a, l.nodes()))
    throw precondition_error("semidirect_transfer: a must fix every node");
  if (!is_collineation(l, v))
    throw precondition_error("semidirect_transfer: v must be a collineation");
  Matrix vi = *v.inverse();
  DualFactorization f{(vi * a * v).transpose(), v.transpose()};

  SubspaceLattice dual = l.dual();
  if (!((a * v).transpose() == f.grp_dual * f.comp_dual))
    throw invariant_error("dual factorization does not multiply back");
  if (!fixes_every_member(f.grp_dual, dual.nodes()))
    throw invariant_error("transferred factor does not fix the dual nodes");
  if (!is_collineation(dual, f.comp_dual))
    throw invariant_error("transferred complement is not a dual collineation");
  return f;
}

Subspace ConjugateOperator::map(const Subspace& s) const {
  if (mat.rows() != s.ambient() || mat.cols() != s.ambient())
    throw precondition_error("operator shape does not match ambient");
  if (!mat.invertible())
    throw precondition_error("subspace image under a singular conjugate operator");
  return Subspace(s.ambient(), mat * s.basis().conj());
}

ConjugateOperator ConjugateOperator::inverse() const {
  std::optional<Matrix> inv = mat.conj().inverse();
  if (!inv) throw precondition_error("inverse of singular conjugate operator");
  return ConjugateOperator{*inv};
}

Matrix compose_conj_conj(const ConjugateOperator& c1,
                         const ConjugateOperator& c2) {
  return c1.mat * c2.mat.conj();
}

ConjugateOperator compose_linear_conj(const Matrix& t,
                                      const ConjugateOperator& c) {
  return ConjugateOperator{t * c.mat};
}

ConjugateOperator compose_conj_linear(const ConjugateOperator& c,
                                      const Matrix& t) {
  return ConjugateOperator{c.mat * t.conj()};
}

namespace {

std::optional<std::vector<std::size_t>> conj_node_map(
    const SubspaceLattice& l, const ConjugateOperator& c) {
  std::vector<std::size_t> image(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    std::optional<std::size_t> j = l.find(c.map(l.node(i)));
    if (!j) return std::nullopt;
    image[i] = *j;
  }
  return image;
}

}  // namespace

bool is_conjugate_collineation(const SubspaceLattice& l,
                               const ConjugateOperator& c) {
  if (c.mat.rows() != l.ambient() || c.mat.cols() != l.ambient())
    throw precondition_error("operator shape does not match ambient");
  if (!c.mat.invertible())
    throw precondition_error("conjugate collineation test needs invertible matrix");
  return conj_node_map(l, c).has_value() &&
         conj_node_map(l, c.inverse()).has_value();
}

std::vector<std::size_t> conjugate_induced_automorphism(
    const SubspaceLattice& l, const ConjugateOperator& c) {
  if (!is_conjugate_collineation(l, c))
    throw precondition_error("operator is not a conjugate collineation");
  return *conj_node_map(l, c);
}

std::vector<std::vector<std::size_t>> dimension_compatible_automorphisms(
    const SubspaceLattice& l) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& p : l.automorphisms()) {
    bool ok = true;
    for (std::size_t i = 0; i < p.size() && ok; ++i)
      ok = l.node(i).dim() == l.node(p[i]).dim();
    if (ok) out.push_back(p);
  }
  return out;
}

}  // namespace sublat
