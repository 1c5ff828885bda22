#ifndef SUBLAT_LATTICE_HPP
#define SUBLAT_LATTICE_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sublat/subspace.hpp"

namespace sublat {

struct ClassifyResult {
  enum class Tag { chain, multi_chain, medial, diamond, double_triangle, other };
  Tag tag = Tag::other;
  bool is_chain = false;
  /// Chain sizes (number of non-trivial elements per chain), sorted
  /// descending; filled for chains and multi-chains.
  std::vector<std::size_t> chain_lengths;
  /// Number of atoms when the lattice is medial (every chain length 1),
  /// zero otherwise. diamond means medial_n == 2, double_triangle == 3.
  std::size_t medial_n = 0;

  std::string tag_name() const;
};

/// Finite partial order on {0..n-1} given by its full (reflexive,
/// transitive) comparability matrix. The classification and automorphism
/// questions in this library are order questions, so they live here;
/// SubspaceLattice delegates. Abstract orders also stand in for the
/// multi-chains with a chain of length >= 2, which no finite-dimensional
/// subspace family can realize (dimension count on cross-chain meets and
/// joins), even though their order theory is meaningful.
class OrderRelation {
public:
  OrderRelation(std::size_t n, std::vector<bool> leq);

  /// Total order 0 < a_1 < ... < a_q < 1 with q non-trivial elements.
  static OrderRelation chain(std::size_t nontrivial);
  /// Chains of the given sizes glued at a common bottom and top, elements
  /// of different chains incomparable.
  static OrderRelation multi_chain(const std::vector<std::size_t>& lengths);

  std::size_t size() const { return n_; }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i * n_ + j]; }
  bool lt(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }

  std::size_t bottom() const;
  std::size_t top() const;

  /// Covering pairs (i, j): i < j with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

  /// All permutations p with i <= j iff p(i) <= p(j); identity first,
  /// lexicographic image order after that.
  std::vector<std::vector<std::size_t>> automorphisms() const;

  ClassifyResult classify() const;

private:
  std::size_t n_;
  std::vector<bool> leq_;
};

/// Finite lattice of subspaces of Q(i)^n. Nodes are canonical, sorted by
/// (dimension, lexicographic basis), always include {0} and the full
/// space, and are meet/join closed.
class SubspaceLattice {
public:
  /// Builds from explicit nodes; {0} and the full space are added when
  /// missing. Throws precondition_error when the family is not meet/join
  /// closed (use closure() to complete a family instead).
  static SubspaceLattice from_nodes(std::size_t ambient,
                                    std::vector<Subspace> nodes);

  /// Smallest closed lattice containing the generators: fixed-point
  /// iteration over pairwise meets and joins, throws cap_exceeded_error
  /// when the node count passes `cap`.
  static SubspaceLattice closure(std::size_t ambient,
                                 const std::vector<Subspace>& generators,
                                 std::size_t cap = 4096);

  std::size_t ambient() const { return ambient_; }
  std::size_t size() const { return nodes_.size(); }
  const Subspace& node(std::size_t i) const { return nodes_[i]; }
  const std::vector<Subspace>& nodes() const { return nodes_; }
  const OrderRelation& order() const { return order_; }

  /// Index of an equal node, if present.
  std::optional<std::size_t> find(const Subspace& s) const;

  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const {
    return order_.hasse_edges();
  }
  std::vector<std::vector<std::size_t>> automorphisms() const {
    return order_.automorphisms();
  }
  ClassifyResult classify() const { return order_.classify(); }

  /// Elementwise annihilator lattice; order-reversing node for node.
  SubspaceLattice dual() const;

private:
  SubspaceLattice(std::size_t ambient, std::vector<Subspace> nodes);

  std::size_t ambient_;
  std::vector<Subspace> nodes_;
  OrderRelation order_;
};

}  // namespace sublat

#endif
