#include "sublat/subspace.hpp"

#include "sublat/errors.hpp"

namespace sublat {

Subspace::Subspace(std::size_t ambient, const Matrix& spanning)
    : ambient_(ambient) {
  if (!spanning.empty() && spanning.rows() != ambient)
    throw precondition_error("spanning matrix rows do not match ambient");
  if (spanning.empty()) {
    basis_ = Matrix(ambient, 0);
    return;
  }
  Rref rr = spanning.transpose().rref();
  Matrix canon(ambient, rr.pivots.size());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    for (std::size_t r = 0; r < ambient; ++r)
      canon.at(r, i) = rr.mat.at(i, r);
  basis_ = std::move(canon);
}

Subspace Subspace::zero(std::size_t ambient) {
  return Subspace(ambient, Matrix(ambient, 0));
}

Subspace Subspace::full(std::size_t ambient) {
  return Subspace(ambient, Matrix::identity(ambient));
}

Subspace Subspace::coordinate(std::size_t ambient,
                              const std::vector<std::size_t>& indices) {
  Matrix m(ambient, indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] >= ambient) throw precondition_error("coordinate index out of range");
    m.at(indices[j], j) = GaussianRational(1);
  }
  return Subspace(ambient, m);
}

Subspace Subspace::span_column(const std::vector<GaussianRational>& v) {
  return Subspace(v.size(), Matrix::column(v));
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_)
    throw precondition_error("ambient mismatch in contains");
  if (other.dim() > dim()) return false;
  return basis_.solve(other.basis_).has_value();
}

bool Subspace::contains_vector(const Matrix& column) const {
  if (column.rows() != ambient_ || column.cols() != 1)
    throw precondition_error("contains_vector expects an ambient column");
  return basis_.solve(column).has_value();
}

Subspace Subspace::meet(const Subspace& other) const {
  if (ambient_ != other.ambient_)
    throw precondition_error("ambient mismatch in meet");
  if (is_zero() || other.is_zero()) return zero(ambient_);
  // null(A | -B) pairs coefficients (x; y) with A x = B y; the A x part
  // sweeps the intersection.
  Matrix paired = Matrix::hstack(basis_, -other.basis_);
  Matrix null = paired.kernel();
  Matrix xpart = null.block(0, 0, basis_.cols(), null.cols());
  return Subspace(ambient_, basis_ * xpart);
}

Subspace Subspace::join(const Subspace& other) const {
  if (ambient_ != other.ambient_)
    throw precondition_error("ambient mismatch in join");
  return Subspace(ambient_, Matrix::hstack(basis_, other.basis_));
}

Subspace Subspace::annihilator() const {
  return Subspace(ambient_, basis_.transpose().kernel());
}

Subspace Subspace::conjugate() const {
  return Subspace(ambient_, basis_.conj());
}

Subspace Subspace::map(const Matrix& s) const {
  if (s.rows() != ambient_ || s.cols() != ambient_)
    throw precondition_error("operator shape does not match ambient");
  if (!s.invertible())
    throw precondition_error("subspace image under a singular operator");
  return Subspace(ambient_, s * basis_);
}

int Subspace::order_cmp(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
  return Matrix::order_cmp(a.basis_, b.basis_);
}

bool is_direct_sum(std::size_t ambient, const std::vector<Subspace>& parts) {
  std::size_t dim_sum = 0;
  for (const auto& p : parts) {
    if (p.ambient() != ambient)
      throw precondition_error("ambient mismatch in direct sum check");
    dim_sum += p.dim();
  }
  if (dim_sum != ambient) return false;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (!parts[i].meet(parts[j]).is_zero()) return false;
  Subspace all = Subspace::zero(ambient);
  for (const auto& p : parts) all = all.join(p);
  return all.is_full();
}

Subspace graph_subspace(const Subspace& m, const Subspace& n,
                        const Matrix& v) {
  if (m.ambient() != n.ambient())
    throw precondition_error("graph_subspace ambient mismatch");
  if (!is_direct_sum(m.ambient(), {m, n}))
    throw precondition_error("graph_subspace needs m (+) n = ambient");
  if (v.rows() != n.dim() || v.cols() != m.dim())
    throw precondition_error("graph map shape mismatch");
  if (!v.invertible())
    throw precondition_error("graph map must be invertible");
  return Subspace(m.ambient(), m.basis() + n.basis() * v);
}

}  // namespace sublat
