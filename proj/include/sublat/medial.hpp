#ifndef SUBLAT_MEDIAL_HPP
#define SUBLAT_MEDIAL_HPP

#include <vector>

#include "sublat/lattice.hpp"
#include "sublat/matrix.hpp"
#include "sublat/subspace.hpp"

namespace sublat {

/// Concrete double triangle in Q(i)^{2m}: three pairwise complementary
/// m-dimensional subspaces together with the coordinate matrices of the
/// three isomorphisms connecting them (v1 : M2 -> M3, v2 : M1 -> M3,
/// v3 : M1 -> M2 w.r.t. the stored bases c1, c2, c3) and the three
/// exchange involutions built from them:
///
///   w1 (x2 + x3) = v1^-1 x3 + v1 x2     (fixes M1 pointwise, M2 <-> M3)
///   w2 (x1 + x3) = v2^-1 x3 + v2 x1     (fixes M2 pointwise, M1 <-> M3)
///   w3 (x1 + x2) = v3^-1 x2 + v3 x1     (fixes M3 pointwise, M1 <-> M2)
///
/// v2 = v1 v3 always, so v3 = v1^-1 v2. Each m_i is the fixed space of
/// the matching involution.
struct MedialRealization {
  std::size_t m = 0;
  Subspace m1 = Subspace::zero(0), m2 = Subspace::zero(0),
           m3 = Subspace::zero(0);
  Matrix c1, c2, c3;  // stored bases, ambient x m each
  Matrix v1, v2, v3;  // m x m coordinate matrices
  Matrix w1, w2, w3;  // ambient x ambient involutions
};

/// Builds the realization from two invertible m x m matrices:
/// M1 = first m coordinates, M2 = graph of v3 over M1 (into the second
/// coordinate block), M3 = graph of v1 over M2 (into M1). The second
/// graph is a common complement of M1 and M2 for every invertible v1,
/// so a direct-sum failure is impossible; it is asserted anyway. The
/// stored bases are scaled so the stored coordinate matrices are exactly
/// the inputs and v2 = v1 v3.
MedialRealization realize_double_triangle(std::size_t m, const Matrix& v3,
                                          const Matrix& v1);

/// Re-checks every structural identity (pairwise direct sums, the three
/// graph relations, w_i^2 = I, fixed spaces, the product relations
/// w1 w2 = w3 w1 = w2 w3 and w1 w3 = w2 w1 = w3 w2); throws
/// invariant_error on any failure.
void verify_medial_relations(const MedialRealization& r);

enum class MedialKind { diamond, double_triangle };

/// {0, M1, M2, X} or {0, M1, M2, M3, X}.
SubspaceLattice medial_lattice(const MedialRealization& r, MedialKind kind);

/// The complement of the fixing group inside the collineation group:
/// {I, w3} for the diamond, {I, w1, w2, w3, w1 w2, w2 w1} for the double
/// triangle (a copy of S_2 resp. S_3, one element per lattice
/// automorphism).
std::vector<Matrix> complement_group(const MedialRealization& r,
                                     MedialKind kind);

struct MedialDecomposition {
  Matrix grp;           // fixes every node
  Matrix w;             // complement element with the same induced action
  std::size_t w_index;  // index into complement_group(r, kind)
};

/// Unique factorization s = grp * w of a collineation: w is the
/// complement element inducing the same node permutation as s, and
/// grp = s w^-1 fixes every node. Non-collineations are a caller error.
MedialDecomposition medial_decompose(const MedialRealization& r,
                                     MedialKind kind, const Matrix& s);

/// Fixed space Ker(I - w) of an involution.
Subspace involution_fixed_space(const Matrix& w);

}  // namespace sublat

#endif
