#include "sublat/collineation.hpp"

#include "sublat/errors.hpp"

namespace sublat {

namespace {

Matrix checked_inverse(const Matrix& s, const SubspaceLattice& l) {
  if (s.rows() != l.ambient() || s.cols() != l.ambient())
    throw precondition_error("operator shape does not match ambient");
  std::optional<Matrix> si = s.inverse();
  if (!si) throw precondition_error("collineation test needs an invertible operator");
  return *si;
}

std::optional<std::vector<std::size_t>> node_map(const SubspaceLattice& l,
                                                 const Matrix& s) {
  std::vector<std::size_t> image(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    std::optional<std::size_t> j =
        l.find(Subspace(l.ambient(), s * l.node(i).basis()));
    if (!j) return std::nullopt;
    image[i] = *j;
  }
  return image;
}

}  // namespace

bool is_collineation(const SubspaceLattice& l, const Matrix& s) {
  Matrix si = checked_inverse(s, l);
  return node_map(l, s).has_value() && node_map(l, si).has_value();
}

bool one_sided_suffices(const SubspaceLattice& l, const Matrix& s) {
  checked_inverse(s, l);
  return node_map(l, s).has_value();
}

std::vector<std::size_t> induced_automorphism(const SubspaceLattice& l,
                                              const Matrix& s) {
  Matrix si = checked_inverse(s, l);
  std::optional<std::vector<std::size_t>> fwd = node_map(l, s);
  if (!fwd || !node_map(l, si))
    throw precondition_error("operator is not a collineation of the lattice");
  return *fwd;
}

bool same_action(const SubspaceLattice& l, const Matrix& s1, const Matrix& s2) {
  return induced_automorphism(l, s1) == induced_automorphism(l, s2);
}

bool normality_check(const SubspaceLattice& l, const Matrix& c,
                     const Matrix& s) {
  OperatorAlgebra alg = alg_of_family(l.ambient(), l.nodes());
  if (!is_collineation(l, c))
    throw precondition_error("normality_check: c is not a collineation");
  if (!grp_membership(alg, s))
    throw precondition_error("normality_check: s is not in Grp(Alg)");
  Matrix ci = *c.inverse();
  return grp_membership(alg, c * s * ci);
}

bool spatial_check(const OperatorAlgebra& alg, const Matrix& s) {
  if (s.rows() != alg.ambient() || s.cols() != alg.ambient())
    throw precondition_error("operator shape does not match ambient");
  std::optional<Matrix> si = s.inverse();
  if (!si) throw precondition_error("spatial_check needs an invertible operator");
  for (const auto& b : alg.basis()) {
    if (!alg.contains(s * b * *si)) return false;
    if (!alg.contains(*si * b * s)) return false;
  }
  return true;
}

bool cyclic_transport_check(const OperatorAlgebra& alg, const Matrix& s,
                            const std::vector<Matrix>& samples) {
  if (s.rows() != alg.ambient() || s.cols() != alg.ambient())
    throw precondition_error("operator shape does not match ambient");
  if (!s.invertible())
    throw precondition_error("cyclic_transport_check needs an invertible operator");
  for (const auto& x : samples) {
    Subspace moved(alg.ambient(), s * cyclic_subspace(alg, x).basis());
    if (!(moved == cyclic_subspace(alg, s * x))) return false;
  }
  return true;
}

std::vector<Matrix> default_spanning_sample(std::size_t ambient) {
  std::vector<Matrix> xs;
  for (std::size_t i = 0; i < ambient; ++i) {
    Matrix e(ambient, 1);
    e.at(i, 0) = GaussianRational(1);
    xs.push_back(e);
  }
  for (std::size_t i = 0; i < ambient; ++i)
    for (std::size_t j = i + 1; j < ambient; ++j) {
      Matrix e(ambient, 1);
      e.at(i, 0) = GaussianRational(1);
      e.at(j, 0) = GaussianRational(1);
      xs.push_back(e);
    }
  return xs;
}

bool grp_product_check(const OperatorAlgebra& alg, const Matrix& a,
                       const Matrix& b, const SubspaceLattice& l) {
  if (l.ambient() != alg.ambient())
    throw precondition_error("lattice and algebra ambient mismatch");
  if (!grp_membership(alg, a))
    throw precondition_error("grp_product_check: a is not in Grp(alg)");
  if (b.rows() != alg.ambient() || b.cols() != alg.ambient() || !b.invertible())
    throw precondition_error("grp_product_check: b must be invertible");
  for (const auto& g : alg.basis())
    if (!(b * g == g * b))
      throw precondition_error("grp_product_check: b does not commute with alg");
  return is_collineation(l, a * b);
}

}  // namespace sublat
