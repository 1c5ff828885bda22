#ifndef SUBLAT_DUALITY_HPP
#define SUBLAT_DUALITY_HPP

#include <vector>

#include "sublat/lattice.hpp"
#include "sublat/matrix.hpp"

namespace sublat {

/// Elementwise annihilator lattice under the bilinear pairing
/// <x, xi> = xi^T x; order anti-isomorphic to l, node for node.
SubspaceLattice perp_family(const SubspaceLattice& l);

/// The adjoint of a collineation under the bilinear pairing is the plain
/// transpose. Checks that s^T is a collineation of the annihilator
/// lattice and that it acts by s^T (M-perp) = (s^-1 M)-perp on every
/// node. Throws precondition_error when s is not a collineation of l.
bool adjoint_is_collineation(const SubspaceLattice& l, const Matrix& s);

struct DualFactorization {
  Matrix grp_dual;   // (v^-1 a v)^T, fixes every annihilator node
  Matrix comp_dual;  // v^T, a collineation of the annihilator lattice
};

/// Transfers a factorization s = a v (a fixing every node of l, v a
/// collineation) to the annihilator lattice: s^T = (v^-1 a v)^T v^T with
/// the first factor in the dual fixing group. Preconditions on a and v
/// are enforced; failure of the transferred memberships is an
/// invariant_error because it cannot happen for valid inputs.
DualFactorization semidirect_transfer(const SubspaceLattice& l,
                                      const Matrix& a, const Matrix& v);

/// Conjugate-linear operator in canonical form x |-> mat * conj(x).
struct ConjugateOperator {
  Matrix mat;

  Matrix apply(const Matrix& column) const { return mat * column.conj(); }
  /// Image of a subspace: mat * conj(M).
  Subspace map(const Subspace& s) const;
  /// y = mat conj(x) inverts to x = conj(mat)^-1 conj(y).
  ConjugateOperator inverse() const;
};

/// Composing two conjugate-linear operators gives a linear one:
/// c1(c2(x)) = c1.mat conj(c2.mat) x.
Matrix compose_conj_conj(const ConjugateOperator& c1,
                         const ConjugateOperator& c2);
/// t after c: x |-> t (c.mat conj x).
ConjugateOperator compose_linear_conj(const Matrix& t,
                                      const ConjugateOperator& c);
/// c after t: x |-> c.mat conj(t x) = (c.mat conj(t)) conj(x).
ConjugateOperator compose_conj_linear(const ConjugateOperator& c,
                                      const Matrix& t);

/// Conjugate collineation test: image and preimage of every node stay in
/// the lattice. Singular mat is a caller error.
bool is_conjugate_collineation(const SubspaceLattice& l,
                               const ConjugateOperator& c);

/// Node permutation induced by a conjugate collineation.
std::vector<std::size_t> conjugate_induced_automorphism(
    const SubspaceLattice& l, const ConjugateOperator& c);

/// Lattice automorphisms that preserve node dimension. Both linear and
/// conjugate-linear invertible operators preserve dimension, so any
/// automorphism outside this list is realized by neither; on the
/// mixed-dimension diamond this refutes the atom swap exhaustively.
std::vector<std::vector<std::size_t>> dimension_compatible_automorphisms(
    const SubspaceLattice& l);

}  // namespace sublat

#endif
