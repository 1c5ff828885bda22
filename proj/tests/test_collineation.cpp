#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "sublat/collineation.hpp"
#include "sublat/errors.hpp"
#include "sublat/medial.hpp"

using namespace sublat;
using namespace sublat::testutil;

namespace {

SubspaceLattice diamond() {
  return SubspaceLattice::from_nodes(2, {line({1, 0}), line({0, 1})});
}

SubspaceLattice chain3() {
  return SubspaceLattice::from_nodes(2, {line({1, 0})});
}

const Matrix kSwap = mat(2, 2, {0, 1, 1, 0});

}  // namespace

TEST_CASE("identity is always a collineation") {
  SubspaceLattice l = diamond();
  CHECK(is_collineation(l, Matrix::identity(2)));
  std::vector<std::size_t> perm = induced_automorphism(l, Matrix::identity(2));
  CHECK(perm == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("swap permutes the diamond atoms") {
  SubspaceLattice l = diamond();
  CHECK(is_collineation(l, kSwap));
  CHECK(induced_automorphism(l, kSwap) == std::vector<std::size_t>{0, 2, 1, 3});
}

TEST_CASE("a fixing operator induces the identity permutation") {
  SubspaceLattice l = diamond();
  Matrix d = mat(2, 2, {1, 0, 0, 2});
  CHECK(is_collineation(l, d));
  CHECK(induced_automorphism(l, d) == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(grp_membership(alg_of_family(2, l.nodes()), d));
}

TEST_CASE("negatives and errors are distinct") {
  SubspaceLattice l = diamond();
  CHECK(!is_collineation(l, mat(2, 2, {1, 1, 0, 1})));  // moves span(e2) out
  CHECK_THROWS_AS(is_collineation(l, mat(2, 2, {1, 2, 2, 4})),
                  precondition_error);  // singular: caller bug
  CHECK_THROWS_AS(is_collineation(l, Matrix::identity(3)), precondition_error);
}

TEST_CASE("one sided invariance decides for finite families") {
  SubspaceLattice c = chain3();
  SubspaceLattice d = diamond();
  Sampler s(53);
  for (int trial = 0; trial < 25; ++trial) {
    Matrix m = s.invertible(2, 2);
    CHECK(one_sided_suffices(c, m) == is_collineation(c, m));
    CHECK(one_sided_suffices(d, m) == is_collineation(d, m));
  }
  CHECK(one_sided_suffices(c, mat(2, 2, {1, 0, 0, 2})));
}

TEST_CASE("induced map is a homomorphism") {
  SubspaceLattice l = diamond();
  Matrix a = kSwap;
  Matrix b = mat(2, 2, {0, 2, 3, 0});  // also swaps the atoms
  std::vector<std::size_t> pa = induced_automorphism(l, a);
  std::vector<std::size_t> pb = induced_automorphism(l, b);
  std::vector<std::size_t> pab = induced_automorphism(l, a * b);
  for (std::size_t i = 0; i < pab.size(); ++i) CHECK(pab[i] == pa[pb[i]]);
}

TEST_CASE("induced permutation preserves meets and joins") {
  MedialRealization r = realize_double_triangle(1, mat(1, 1, {2}), mat(1, 1, {3}));
  SubspaceLattice l = medial_lattice(r, MedialKind::double_triangle);
  for (const Matrix& w : complement_group(r, MedialKind::double_triangle)) {
    std::vector<std::size_t> p = induced_automorphism(l, w);
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = 0; j < l.size(); ++j) {
        Subspace mt = l.node(i).meet(l.node(j));
        Subspace jn = l.node(i).join(l.node(j));
        CHECK(l.node(p[*l.find(mt)]) == l.node(p[i]).meet(l.node(p[j])));
        CHECK(l.node(p[*l.find(jn)]) == l.node(p[i]).join(l.node(p[j])));
      }
  }
}

TEST_CASE("same action is grp membership of the quotient") {
  SubspaceLattice c = chain3();
  CHECK(same_action(c, mat(2, 2, {1, 0, 0, 2}), Matrix::identity(2)));
  CHECK(same_action(c, kSwap * kSwap, Matrix::identity(2)));

  SubspaceLattice d = diamond();
  CHECK(!same_action(d, kSwap, Matrix::identity(2)));
  CHECK(same_action(d, kSwap, mat(2, 2, {0, 5, 1, 0})));

  OperatorAlgebra alg = alg_of_family(2, d.nodes());
  Matrix s1 = kSwap, s2 = mat(2, 2, {0, 5, 1, 0});
  CHECK(same_action(d, s1, s2) == grp_membership(alg, *s2.inverse() * s1));

  CHECK_THROWS_AS(same_action(d, mat(2, 2, {1, 1, 0, 1}), Matrix::identity(2)),
                  precondition_error);
}

TEST_CASE("conjugating the fixing group stays inside it") {
  SubspaceLattice d = diamond();
  CHECK(normality_check(d, Matrix::identity(2), Matrix::identity(2)));
  CHECK(normality_check(d, kSwap, mat(2, 2, {2, 0, 0, 3})));

  MedialRealization r = realize_double_triangle(1, mat(1, 1, {1}), mat(1, 1, {1}));
  SubspaceLattice dt = medial_lattice(r, MedialKind::double_triangle);
  OperatorAlgebra alg = alg_of_family(2, dt.nodes());
  Sampler s(59);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix g = invertible_in_span(alg, s);
    CHECK(normality_check(dt, r.w1, g));
    CHECK(normality_check(dt, r.w2 * r.w1, g));
  }

  CHECK_THROWS_AS(normality_check(d, mat(2, 2, {1, 1, 0, 1}), Matrix::identity(2)),
                  precondition_error);  // c not a collineation
  CHECK_THROWS_AS(normality_check(d, kSwap, kSwap), precondition_error);
}

TEST_CASE("spatial automorphism test") {
  OperatorAlgebra diag = alg_of_family(2, diamond().nodes());
  CHECK(spatial_check(diag, Matrix::identity(2)));
  CHECK(spatial_check(diag, kSwap));
  CHECK(!spatial_check(diag, mat(2, 2, {1, 1, 0, 1})));
  CHECK_THROWS_AS(spatial_check(diag, mat(2, 2, {1, 2, 2, 4})),
                  precondition_error);
}

TEST_CASE("cyclic subspace transport") {
  OperatorAlgebra diag = alg_of_family(2, diamond().nodes());
  std::vector<Matrix> xs = default_spanning_sample(2);
  CHECK(cyclic_transport_check(diag, Matrix::identity(2), xs));
  CHECK(cyclic_transport_check(diag, kSwap, xs));
  CHECK(!cyclic_transport_check(diag, mat(2, 2, {1, 1, 0, 1}), {colv({0, 1})}));
}

TEST_CASE("default spanning sample") {
  std::vector<Matrix> xs = default_spanning_sample(3);
  CHECK(xs.size() == 6);  // 3 basis vectors + 3 pairwise sums
  CHECK(xs[0] == colv({1, 0, 0}));
  CHECK(xs[3] == colv({1, 1, 0}));
}

TEST_CASE("product of a fixer and a central invertible is a collineation") {
  SubspaceLattice c = chain3();
  OperatorAlgebra ut = alg_of_family(2, c.nodes());
  CHECK(grp_product_check(ut, Matrix::identity(2), Matrix::identity(2), c));
  CHECK(grp_product_check(ut, mat(2, 2, {1, 1, 0, 2}), g(3) * Matrix::identity(2), c));

  OperatorAlgebra diag = alg_of_family(2, diamond().nodes());
  CHECK_THROWS_AS(
      grp_product_check(diag, mat(2, 2, {2, 0, 0, 3}), kSwap, diamond()),
      precondition_error);  // swap does not commute with the diagonals
}

TEST_CASE("three way equivalence on reflexive algebras") {
  SubspaceLattice chain = chain3();
  SubspaceLattice dia = diamond();
  OperatorAlgebra ut = alg_of_family(2, chain.nodes());
  OperatorAlgebra diag = alg_of_family(2, dia.nodes());
  std::vector<Matrix> xs = default_spanning_sample(2);
  Sampler s(61);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m = s.invertible(2, 3);
    bool col = is_collineation(chain, m);
    CHECK(col == spatial_check(ut, m));
    CHECK(col == cyclic_transport_check(ut, m, xs));
    bool cold = is_collineation(dia, m);
    CHECK(cold == spatial_check(diag, m));
    CHECK(cold == cyclic_transport_check(diag, m, xs));
  }
}
