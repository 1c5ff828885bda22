#ifndef SUBLAT_SUBSPACE_HPP
#define SUBLAT_SUBSPACE_HPP

#include <vector>

#include "sublat/matrix.hpp"

namespace sublat {

/// Linear subspace of Q(i)^n, held as its unique column-reduced canonical
/// basis (columns are the transposed RREF rows of the spanning set, so two
/// subspaces are equal exactly when their basis matrices are entrywise
/// equal). The zero subspace has an n x 0 basis.
class Subspace {
public:
  /// Canonicalizes the column span of `spanning` (an ambient x k matrix).
  Subspace(std::size_t ambient, const Matrix& spanning);

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  /// Span of the standard basis vectors with the given indices.
  static Subspace coordinate(std::size_t ambient,
                             const std::vector<std::size_t>& indices);
  static Subspace span_column(const std::vector<GaussianRational>& v);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  /// ambient x dim canonical basis, columns span the subspace.
  const Matrix& basis() const { return basis_; }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  bool contains(const Subspace& other) const;
  bool contains_vector(const Matrix& column) const;

  Subspace meet(const Subspace& other) const;
  Subspace join(const Subspace& other) const;

  /// {xi : xi^T x = 0 for all x here} under the bilinear (transpose, not
  /// conjugating) pairing; lives in the dual copy of Q(i)^n.
  Subspace annihilator() const;

  /// Entrywise complex conjugate of the subspace.
  Subspace conjugate() const;

  /// Image under an invertible operator (throws when s is singular, which
  /// is a caller error, not a negative answer).
  Subspace map(const Matrix& s) const;

  /// (dim, lexicographic basis) ordering used for canonical node sorts.
  static int order_cmp(const Subspace& a, const Subspace& b);

private:
  std::size_t ambient_;
  Matrix basis_;
};

/// True when the parts pairwise intersect trivially and their join is the
/// whole space with dimensions summing to the ambient dimension.
bool is_direct_sum(std::size_t ambient, const std::vector<Subspace>& parts);

/// Graph subspace {x + v(x) : x in m}: v maps m's basis coordinates to n's
/// basis coordinates and must be invertible; m and n must satisfy
/// m (+) n = ambient. The result is a common complement of m and n.
Subspace graph_subspace(const Subspace& m, const Subspace& n, const Matrix& v);

}  // namespace sublat

#endif
