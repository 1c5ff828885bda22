#ifndef SUBLAT_ALGEBRA_HPP
#define SUBLAT_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sublat/lattice.hpp"
#include "sublat/matrix.hpp"
#include "sublat/subspace.hpp"

namespace sublat {

/// Linear span of n x n matrices in reduced echelon coordinates: rows of
/// `rref_rows` are flattened matrices, so membership is one reduction.
class MatrixSpan {
public:
  MatrixSpan(std::size_t n, const std::vector<Matrix>& generators);

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Matrix>& basis() const { return basis_; }

  bool contains(const Matrix& m) const;

private:
  std::size_t n_;
  Matrix rref_rows_;
  std::vector<Matrix> basis_;
};

/// Unital, multiplicatively closed space of n x n matrices, stored by a
/// linear basis. Both closure properties are checked at construction.
class OperatorAlgebra {
public:
  OperatorAlgebra(std::size_t ambient, const std::vector<Matrix>& basis);

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return span_.dim(); }
  const std::vector<Matrix>& basis() const { return span_.basis(); }
  const MatrixSpan& span() const { return span_; }

  bool contains(const Matrix& m) const { return span_.contains(m); }

private:
  std::size_t n_;
  MatrixSpan span_;
};

/// T M subset of M for every basis column of m.
bool is_invariant(const Matrix& t, const Subspace& m);

/// Largest algebra leaving every member invariant: one kernel computation
/// over the n^2 matrix entries, one bilinear constraint per (annihilator
/// functional, basis column) pair and member.
OperatorAlgebra alg_of_family(std::size_t ambient,
                              const std::vector<Subspace>& members);

/// {T : T A = A T for every generator}; Sylvester constraints, one kernel.
OperatorAlgebra commutant(std::size_t ambient,
                          const std::vector<Matrix>& generators);

OperatorAlgebra bicommutant(std::size_t ambient,
                            const std::vector<Matrix>& generators);

/// span{B x : B in the algebra}; contains x since the algebra is unital.
Subspace cyclic_subspace(const OperatorAlgebra& alg, const Matrix& x);

/// s is invertible and fixes every member (s M = M, image equality).
/// Singular s throws; a false answer is a legitimate negative.
bool fixes_every_member(const Matrix& s, const std::vector<Subspace>& members);

/// Membership in Grp(A) = {invertible s with s and s^-1 in A}. For an
/// invertible member of a finite-dimensional algebra the inverse is
/// automatically inside, but both inclusions are checked literally.
bool grp_membership(const OperatorAlgebra& alg, const Matrix& s);

struct ReflexivityReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  bool exhaustive_small = false;
  long exhaustive_height = 0;
  /// Cyclic (or invariant, in exhaustive-small mode) subspaces that are
  /// missing from the lattice; empty means no counterexample was found.
  std::vector<Subspace> witnesses;
  std::string verdict;  // "counterexample_found" or "no_counterexample"
};

struct ReflexivityProbeOptions {
  std::size_t node_cap = 4096;
  /// When ambient <= 3 and this is positive, additionally enumerate the
  /// 1- and (ambient-1)-dimensional candidate subspaces with Gaussian
  /// integer data of height <= exhaustive_height ("exhaustive-small").
  long exhaustive_height = 0;
};

/// Samples seeded trial vectors, tests whether each cyclic subspace of
/// Alg(lattice) lies in the lattice, and closes the found cyclic subspaces
/// under meet/join (up to the node cap). Witnesses refute reflexivity;
/// an empty witness list is inconclusive unless exhaustive-small ran.
ReflexivityReport reflexivity_probe(const SubspaceLattice& l,
                                    std::size_t trials, std::uint64_t seed,
                                    const ReflexivityProbeOptions& opts = {});

}  // namespace sublat

#endif
