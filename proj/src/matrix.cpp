#include "sublat/matrix.hpp"

#include <ostream>
#include <sstream>

#include "sublat/errors.hpp"

namespace sublat {

Matrix::Matrix(std::size_t rows, std::size_t cols,
               std::vector<GaussianRational> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols)
    throw precondition_error("matrix entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
  return m;
}

Matrix Matrix::column(const std::vector<GaussianRational>& v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::conj() const {
  Matrix t(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) t.a_[k] = a_[k].conj();
  return t;
}

Matrix Matrix::operator-() const {
  Matrix t(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) t.a_[k] = -a_[k];
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw precondition_error("matrix sum shape mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw precondition_error("matrix difference shape mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw precondition_error("matrix product shape mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussianRational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const GaussianRational& bkj = b.at(k, j);
        if (!bkj.is_zero()) p.at(i, j) += aik * bkj;
      }
    }
  return p;
}

Matrix operator*(const GaussianRational& s, Matrix a) {
  for (auto& e : a.a_) e *= s;
  return a;
}

bool Matrix::is_zero() const {
  for (const auto& e : a_)
    if (!e.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  return *this == identity(rows_);
}

std::vector<GaussianRational> Matrix::col(std::size_t c) const {
  std::vector<GaussianRational> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t rows,
                     std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_)
    throw precondition_error("block out of range");
  Matrix b(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) b.at(r, c) = at(r0 + r, c0 + c);
  return b;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.rows_ != b.rows_) throw precondition_error("hstack row mismatch");
  Matrix m(a.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < a.cols_; ++c) m.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < b.cols_; ++c) m.at(r, a.cols_ + c) = b.at(r, c);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.cols_ != b.cols_) throw precondition_error("vstack column mismatch");
  Matrix m(a.rows_ + b.rows_, a.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c) m.at(r, c) = a.at(r, c);
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c) m.at(a.rows_ + r, c) = b.at(r, c);
  return m;
}

Rref Matrix::rref() const {
  Rref out{*this, {}};
  Matrix& m = out.mat;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t piv = row;
    while (piv < rows_ && m.at(piv, col).is_zero()) ++piv;
    if (piv == rows_) continue;
    if (piv != row)
      for (std::size_t c = 0; c < cols_; ++c)
        std::swap(m.at(piv, c), m.at(row, c));
    GaussianRational inv = m.at(row, col).inverse();
    for (std::size_t c = col; c < cols_; ++c) m.at(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row) continue;
      GaussianRational f = m.at(r, col);
      if (f.is_zero()) continue;
      for (std::size_t c = col; c < cols_; ++c)
        m.at(r, c) -= f * m.at(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t Matrix::rank() const { return rref().pivots.size(); }

Matrix Matrix::kernel() const {
  Rref rr = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(cols_, free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    std::size_t fc = free_cols[j];
    k.at(fc, j) = GaussianRational(1);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
      k.at(rr.pivots[i], j) = -rr.mat.at(i, fc);
  }
  return k;
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
  if (b.rows_ != rows_) throw precondition_error("solve shape mismatch");
  Rref rr = hstack(*this, b).rref();
  for (std::size_t p : rr.pivots)
    if (p >= cols_) return std::nullopt;
  Matrix x(cols_, b.cols_);
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      x.at(rr.pivots[i], j) = rr.mat.at(i, cols_ + j);
  return x;
}

std::optional<Matrix> Matrix::inverse() const {
  if (!is_square()) throw precondition_error("inverse of non-square matrix");
  Rref rr = hstack(*this, identity(rows_)).rref();
  if (rr.pivots.size() < rows_ || (rows_ > 0 && rr.pivots.back() >= rows_))
    return std::nullopt;
  return rr.mat.block(0, rows_, rows_, rows_);
}

int Matrix::order_cmp(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_ ? -1 : 1;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_ ? -1 : 1;
  for (std::size_t k = 0; k < a.a_.size(); ++k) {
    int c = GaussianRational::order_cmp(a.a_[k], b.a_[k]);
    if (c != 0) return c;
  }
  return 0;
}

Matrix Matrix::flatten_row() const {
  Matrix f(1, rows_ * cols_);
  f.a_ = a_;
  return f;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c)
      os << (c ? " " : "") << at(r, c).str();
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  return os << m.str();
}

}  // namespace sublat
