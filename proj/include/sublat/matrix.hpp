#ifndef SUBLAT_MATRIX_HPP
#define SUBLAT_MATRIX_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "sublat/gaussian.hpp"

namespace sublat {

struct Rref;

/// Dense row-major matrix over Q(i). All reductions are exact; the row
/// echelon form is fully reduced (Gauss-Jordan) so it is the unique RREF
/// of the row space, which every canonical form downstream relies on.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols,
         std::vector<GaussianRational> entries);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols);
  }
  /// Single column from a vector.
  static Matrix column(const std::vector<GaussianRational>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const GaussianRational& at(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }
  GaussianRational& at(std::size_t r, std::size_t c) {
    return a_[r * cols_ + c];
  }

  const std::vector<GaussianRational>& entries() const { return a_; }

  Matrix transpose() const;
  /// Entrywise complex conjugate.
  Matrix conj() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const GaussianRational& s, Matrix a);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  bool is_zero() const;
  bool is_identity() const;
  bool is_square() const { return rows_ == cols_; }

  /// Column c as a vector.
  std::vector<GaussianRational> col(std::size_t c) const;

  Matrix block(std::size_t r0, std::size_t c0, std::size_t rows,
               std::size_t cols) const;
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);

  /// Unique reduced row echelon form (pivots are 1, pivot columns cleared).
  Rref rref() const;

  std::size_t rank() const;

  /// Columns span the null space {x : A x = 0}; cols() - rank() of them,
  /// in the deterministic free-column order of the RREF.
  Matrix kernel() const;

  /// A particular solution X of A X = B with free variables set to zero,
  /// or nullopt when some column of B is outside the column space.
  std::optional<Matrix> solve(const Matrix& b) const;

  std::optional<Matrix> inverse() const;
  bool invertible() const { return is_square() && rank() == rows_; }

  /// Lexicographic row-major order on (rows, cols, entries); deterministic
  /// tie-break for canonical sorts, no algebraic meaning.
  static int order_cmp(const Matrix& a, const Matrix& b);

  /// 1 x (rows*cols) row-major flattening (for operator-space reductions).
  Matrix flatten_row() const;

  std::string str() const;

private:
  std::size_t rows_, cols_;
  std::vector<GaussianRational> a_;
};

struct Rref {
  Matrix mat;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace sublat

#endif
