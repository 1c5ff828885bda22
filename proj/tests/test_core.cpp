#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "sublat/errors.hpp"
#include "sublat/gaussian.hpp"
#include "sublat/matrix.hpp"
#include "sublat/rational.hpp"

using namespace sublat;
using namespace sublat::testutil;

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));

  CHECK(Rational::parse("3/6").str() == "1/2");
  CHECK(Rational::parse("-4/2").str() == "-2");
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational::parse("0/5") == Rational(0));

  CHECK_THROWS_AS(Rational::parse(""), parse_error);
  CHECK_THROWS_AS(Rational::parse("1/0"), parse_error);
  CHECK_THROWS_AS(Rational::parse("abc"), parse_error);
  CHECK_THROWS_AS(Rational::parse("1.5"), parse_error);
  CHECK_THROWS_AS(Rational(1, 0), precondition_error);
}

TEST_CASE("rational arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(a.inverse() == Rational(3));
  CHECK(Rational(-2, 3).abs() == Rational(2, 3));
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK_THROWS_AS(Rational(0).inverse(), precondition_error);

  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1) < Rational(0));
  CHECK(Rational(7, 3).sign() == 1);
  CHECK(Rational(-7, 3).sign() == -1);
  CHECK(Rational(0).is_zero());
}

TEST_CASE("rational square roots are exact or absent") {
  CHECK(Rational(9, 4).sqrt_exact() == Rational(3, 2));
  CHECK(Rational(0).sqrt_exact() == Rational(0));
  CHECK(Rational(1).sqrt_exact() == Rational(1));
  CHECK(!Rational(2).sqrt_exact().has_value());
  CHECK(!Rational(-4).sqrt_exact().has_value());
  CHECK(Rational(49, 81).sqrt_exact() == Rational(7, 9));
}

TEST_CASE("rational height") {
  CHECK(Rational(3, 7).height64() == std::uint64_t{7});
  CHECK(Rational(-9, 2).height64() == std::uint64_t{9});
  CHECK(Rational(0).height64() == std::uint64_t{1});
}

TEST_CASE("gaussian rational field laws") {
  GaussianRational i = GaussianRational::i();
  CHECK(i * i == g(-1));
  CHECK(i.conj() == gim(0, -1));
  CHECK(gim(3, 4).norm2() == Rational(25));
  CHECK(gim(1, 1) / gim(1, -1) == i);
  CHECK(gim(2, 3).inverse() * gim(2, 3) == g(1));
  CHECK(gim(5, 0).is_real());
  CHECK(!gim(0, 1).is_real());
  CHECK(gim(0, 0).is_zero());
  CHECK_THROWS_AS(g(0).inverse(), precondition_error);

  CHECK(GaussianRational::order_cmp(g(1), g(2)) < 0);
  CHECK(GaussianRational::order_cmp(gim(1, 1), gim(1, 1)) == 0);
}

TEST_CASE("matrix construction and shape") {
  Matrix id = Matrix::identity(3);
  CHECK(id.is_identity());
  CHECK(id.is_square());
  CHECK(Matrix::zero(2, 3).is_zero());
  CHECK(colv({1, 2}).rows() == 2);
  CHECK(colv({1, 2}).cols() == 1);

  Matrix a = mat(2, 3, {1, 2, 3, 4, 5, 6});
  CHECK(a.at(0, 2) == g(3));
  CHECK(a.at(1, 0) == g(4));
  CHECK(a.transpose().at(2, 0) == g(3));
  CHECK(a.transpose().transpose() == a);

  CHECK_THROWS_AS(Matrix(2, 2, {g(1)}), precondition_error);
}

TEST_CASE("matrix algebra") {
  Matrix a = mat(2, 2, {1, 2, 3, 4});
  Matrix b = mat(2, 2, {0, 1, 1, 0});
  CHECK(a * b == mat(2, 2, {2, 1, 4, 3}));
  CHECK(b * a == mat(2, 2, {3, 4, 1, 2}));
  CHECK(a + b - b == a);
  CHECK(g(2) * a == mat(2, 2, {2, 4, 6, 8}));
  CHECK(-a == mat(2, 2, {-1, -2, -3, -4}));

  Matrix c = mat(2, 2, {0, -1, 1, 0});
  Matrix z = Matrix(2, 2, {gim(0, 0), gim(0, -1), gim(0, 1), gim(0, 0)});
  CHECK(z.conj() == Matrix(2, 2, {gim(0, 0), gim(0, 1), gim(0, -1), gim(0, 0)}));
  CHECK((c * c) == mat(2, 2, {-1, 0, 0, -1}));
}

TEST_CASE("stacking and blocks") {
  Matrix a = mat(2, 2, {1, 2, 3, 4});
  Matrix b = mat(2, 1, {5, 6});
  Matrix h = Matrix::hstack(a, b);
  CHECK(h.cols() == 3);
  CHECK(h.at(1, 2) == g(6));
  Matrix v = Matrix::vstack(a, mat(1, 2, {7, 8}));
  CHECK(v.rows() == 3);
  CHECK(v.at(2, 1) == g(8));
  CHECK(h.block(0, 1, 2, 2) == mat(2, 2, {2, 5, 4, 6}));
  CHECK(a.col(1) == std::vector<GaussianRational>{g(2), g(4)});
  CHECK(a.flatten_row() == mat(1, 4, {1, 2, 3, 4}));
}

TEST_CASE("rref of a rank-deficient matrix") {
  Matrix a = mat(2, 2, {1, 2, 2, 4});
  Rref r = a.rref();
  CHECK(r.mat == mat(2, 2, {1, 2, 0, 0}));
  CHECK(r.pivots == std::vector<std::size_t>{0});
  CHECK(a.rank() == 1);
  CHECK(!a.invertible());
  CHECK(a.kernel() == mat(2, 1, {-2, 1}));
}

TEST_CASE("rref edge cases") {
  CHECK(Matrix::identity(3).rref().mat == Matrix::identity(3));
  CHECK(Matrix::identity(3).rref().pivots == std::vector<std::size_t>{0, 1, 2});
  CHECK(Matrix::zero(2, 2).rref().pivots.empty());
  CHECK(Matrix::zero(2, 2).kernel() == Matrix::identity(2));
  CHECK(Matrix::identity(2).kernel().cols() == 0);

  // rref is canonical: any invertible recombination of the rows reduces
  // to the same form.
  Matrix m = mat(3, 4, {1, 2, 0, 3, 0, 0, 1, 1, 0, 0, 0, 0});
  Matrix shuffled = mat(3, 3, {2, 1, 0, 1, 1, 0, 3, 1, 1}) * m;
  CHECK(shuffled.rref().mat == m);
}

TEST_CASE("inverse") {
  Matrix u = mat(2, 2, {1, 1, 0, 1});
  CHECK(u.inverse() == mat(2, 2, {1, -1, 0, 1}));
  CHECK(!mat(2, 2, {1, 2, 2, 4}).inverse().has_value());

  Matrix zc(2, 2, {gim(1, 1), g(0), g(0), gim(0, 1)});
  Matrix zi = *zc.inverse();
  CHECK(zc * zi == Matrix::identity(2));
  CHECK(zi * zc == Matrix::identity(2));
}

TEST_CASE("solve") {
  Matrix a = mat(2, 2, {1, 1, 0, 1});
  CHECK(a.solve(colv({3, 1})) == colv({2, 1}));
  CHECK(!mat(2, 2, {1, 2, 2, 4}).solve(colv({1, 0})).has_value());

  // Consistent underdetermined system: free variables are pinned to zero.
  Matrix wide = mat(1, 2, {1, 2});
  CHECK(wide.solve(mat(1, 1, {5})) == colv({5, 0}));

  Matrix sing = mat(2, 2, {1, 2, 2, 4});
  std::optional<Matrix> x = sing.solve(colv({1, 2}));
  REQUIRE(x.has_value());
  CHECK(sing * *x == colv({1, 2}));
}

TEST_CASE("random solve round trips") {
  Sampler s(11);
  for (int trial = 0; trial < 5; ++trial) {
    Matrix a = s.invertible(4, 4);
    Matrix b = s.matrix(4, 2, 4);
    std::optional<Matrix> x = a.solve(b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
    CHECK(*a.inverse() * a == Matrix::identity(4));
  }
}

TEST_CASE("deterministic matrix order") {
  Matrix a = mat(1, 2, {1, 2});
  Matrix b = mat(1, 2, {1, 3});
  CHECK(Matrix::order_cmp(a, b) < 0);
  CHECK(Matrix::order_cmp(b, a) > 0);
  CHECK(Matrix::order_cmp(a, a) == 0);
  CHECK(Matrix::order_cmp(mat(1, 1, {9}), a) < 0);  // fewer columns first
}
