#ifndef SUBLAT_NESTS_HPP
#define SUBLAT_NESTS_HPP

#include "sublat/pl.hpp"
#include "sublat/rational.hpp"

namespace sublat {

/// Power of the bilateral shift acting on the integer-indexed nest by
/// index translation: node k maps to node k + shift.
struct ShiftNestOperator {
  long long shift = 0;

  friend ShiftNestOperator operator*(ShiftNestOperator a,
                                     ShiftNestOperator b) {
    return {a.shift + b.shift};
  }
  ShiftNestOperator inverse() const { return {-shift}; }
  friend bool operator==(ShiftNestOperator, ShiftNestOperator) = default;
};

/// full_z: the doubly infinite nest, one node per integer.
/// half_from_0: only the nodes with index >= 0 (each node is the closed
/// span of the basis tails, so larger index means smaller node; the
/// shift by +1 maps every member strictly inside the family).
enum class ShiftFamily { full_z, half_from_0 };

/// Forward test only: does the shift by s map every member of the family
/// to a member. On the half family this holds for every s >= 0.
bool shift_one_sided_test(ShiftFamily family, long long s);

/// Two-sided test (the shift and its inverse both preserve the family).
/// On the half family only s = 0 survives: the inverse shift drags the
/// outermost node to index -1, outside the family.
bool shift_collineation_test(ShiftFamily family, long long s);

struct ShiftFactorization {
  /// Exponent of the pure shift factor; equals the action index.
  long long w_power;
  /// Index shift of the remaining factor; always 0, meaning that factor
  /// fixes every node and lies in the fixing group of the nest algebra.
  long long residual_shift;
};

/// Splits a collineation of the full nest, known by the index s of the
/// image of node 0 (which determines the whole action: node k maps to
/// node k + s), into a node-fixing factor and a pure shift power.
ShiftFactorization shift_decompose(long long s_index);

/// Decreasing reparametrization of [0,1] onto [-1,0], stored canonically
/// as t -> -increasing(t) with increasing a pl bijection of [0,1].
struct DecreasingPL {
  PLBijection increasing;
  bool negated = true;
};

/// Symmetry-group membership for the two-sided nest on [-1,1] indexed by
/// the pair (theta1, theta2): true iff
/// theta1^-1 . phi . theta1 = theta2^-1 . phi . theta2 as functions of
/// [0,1]. Membership forces phi(0) = 0, so a phi moving 0 is rejected
/// outright (the two sides would not even share a domain).
bool gamma_theta_membership(const PLBijection& phi, const DecreasingPL& theta1,
                            const PLBijection& theta2);

/// Cut action of the composition operator of phi on the two-sided nest:
/// t -> (theta2^-1 . phi^-1 . theta2)(t), an increasing bijection of
/// [0,1]. Throws precondition_error unless phi passes the membership
/// test above (otherwise the action is not defined on the nest).
PLBijection two_sided_cut_action(const PLBijection& phi,
                                 const DecreasingPL& theta1,
                                 const PLBijection& theta2);

/// Cut action of the transfer operator of phi on the continuous nest
/// over [0,1]: cut t maps to phi^-1(t).
Rational volterra_nest_action(const PLBijection& phi, const Rational& t);

struct VolterraFactorization {
  /// Parameter of the complement factor (a transfer operator); its cut
  /// action is the inverse of this bijection.
  PLBijection v_param;
  /// Cut action of the node-fixing factor: the composed action of the
  /// input and the complement's inverse. Identity by construction.
  PLBijection residual;
};

/// Splits a collineation of the continuous nest, given by its cut action
/// t -> action(t), into a node-fixing factor and a transfer operator:
/// the transfer operator with parameter action^-1 realizes the same cut
/// action, so composing the input with its inverse fixes every cut.
/// residual not coming out as the identity would be an invariant_error.
VolterraFactorization volterra_decompose(const PLBijection& action);

/// Piecewise-linear approximation, at a given subdivision depth, of the
/// increasing bijection x -> (x + c(x))/2 built from the middle-thirds
/// staircase function c. Every segment slope is >= 1/2, so the inverse
/// has difference quotients bounded below by 1/2 exactly. The slopes on
/// the staircase's flat spots equal 1/2 while the steep spots grow with
/// depth; in the limit the derivative has no positive lower bound on a
/// set of positive measure, which is why the limit function leaves the
/// class handled by the transfer-operator calculus.
PLBijection cantor_psi_approx(int depth);

/// Whether phi and its inverse map rational cuts to rational cuts, so
/// that the collineation restricts to the rational-indexed subnest. For
/// the piecewise-linear class with rational breakpoints this is always
/// true: each segment acts by a rational affine map in both directions.
/// Outside this class the restriction can fail (a cube map's inverse
/// moves rational cuts to irrational ones), which is why collineations
/// of the completed nest can strictly outnumber those of the rational
/// one; that gap is not representable here and is only documented.
bool nest_q_restriction_test(const PLBijection& phi);

}  // namespace sublat

#endif
