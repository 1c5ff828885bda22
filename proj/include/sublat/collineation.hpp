#ifndef SUBLAT_COLLINEATION_HPP
#define SUBLAT_COLLINEATION_HPP

#include <optional>
#include <vector>

#include "sublat/algebra.hpp"
#include "sublat/lattice.hpp"

namespace sublat {

/// True iff s M and s^-1 M lie in the lattice for every node M. Both
/// directions are checked literally even though for a finite closed
/// family the forward direction already decides (see one_sided_suffices).
/// Singular s is a caller error, not a negative answer.
bool is_collineation(const SubspaceLattice& l, const Matrix& s);

/// Forward direction only: s M in l for every node. For finite families
/// this agrees with is_collineation (the node map of an injective image
/// of a finite set onto itself is a permutation); the symbolic half-nest
/// in the nest module is the standard infinite witness where it fails.
bool one_sided_suffices(const SubspaceLattice& l, const Matrix& s);

/// Node permutation M_i -> M_{p(i)} induced by a collineation; throws
/// precondition_error when s is not a collineation of l.
std::vector<std::size_t> induced_automorphism(const SubspaceLattice& l,
                                              const Matrix& s);

/// Two collineations act identically on the nodes; equivalent to
/// s2^-1 s1 lying in Grp(Alg(l)).
bool same_action(const SubspaceLattice& l, const Matrix& s1, const Matrix& s2);

/// Verifies c s c^-1 in Grp(Alg(l)) for a collineation c and s in
/// Grp(Alg(l)); the fixing group is normal in the collineation group, so
/// a false return means a broken input (both preconditions are enforced).
bool normality_check(const SubspaceLattice& l, const Matrix& c,
                     const Matrix& s);

/// s A s^-1 = A as sets: conjugation of every basis element lands in the
/// span, in both directions.
bool spatial_check(const OperatorAlgebra& alg, const Matrix& s);

/// s A_x = A_{s x} for every sample vector x.
bool cyclic_transport_check(const OperatorAlgebra& alg, const Matrix& s,
                            const std::vector<Matrix>& samples);

/// Standard basis vectors plus all pairwise sums e_i + e_j (i < j); the
/// default sample for cyclic_transport_check.
std::vector<Matrix> default_spanning_sample(std::size_t ambient);

/// a in Grp(alg), b invertible and commuting with alg: the product a b is
/// then a collineation of any lattice of alg-invariant subspaces that b
/// maps into itself; this verifies it literally on l.
bool grp_product_check(const OperatorAlgebra& alg, const Matrix& a,
                       const Matrix& b, const SubspaceLattice& l);

}  // namespace sublat

#endif
