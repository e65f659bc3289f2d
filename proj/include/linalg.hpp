// Exact linear algebra over the rationals: dense matrices, row reduction,
// kernels, solving.  Everything here is deliberately simple; instances in
// this project are small and correctness beats speed.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>
#include <optional>
#include <vector>

namespace linalg {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

using Vec = std::vector<Rational>;

class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rational& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
      assert(rows[i].size() == m.cols_);
      for (size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  Vec row(size_t r) const {
    return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    assert(cols_ == o.rows_);
    Matrix p(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        if (at(i, k) == 0) continue;
        for (size_t j = 0; j < o.cols_; ++j)
          p.at(i, j) += at(i, k) * o.at(k, j);
      }
    return p;
  }

  Vec apply(const Vec& v) const {
    assert(v.size() == cols_);
    Vec w(rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j)
        if (at(i, j) != 0) w[i] += at(i, j) * v[j];
    return w;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  // In-place reduced row echelon form; returns pivot columns.
  std::vector<size_t> rref() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
      size_t p = r;
      while (p < rows_ && at(p, c) == 0) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
      Rational inv = at(r, c);
      for (size_t j = c; j < cols_; ++j) at(r, j) /= inv;
      for (size_t i = 0; i < rows_; ++i) {
        if (i == r || at(i, c) == 0) continue;
        Rational f = at(i, c);
        for (size_t j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

 private:
  size_t rows_, cols_;
  std::vector<Rational> data_;
};

inline size_t rank(Matrix m) { return m.rref().size(); }

// Basis of the right kernel {x : M x = 0}, one vector per free column.
inline std::vector<Vec> kernel_basis(Matrix m) {
  std::vector<size_t> pivots = m.rref();
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(m.cols());
    v[c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solve M x = b; returns one solution if consistent.
inline std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  assert(b.size() == m.rows());
  Matrix aug(m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<size_t> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
  return x;
}

// Dimension of the span of a set of vectors.
inline size_t span_dim(const std::vector<Vec>& vs) {
  if (vs.empty()) return 0;
  return rank(Matrix::from_rows(vs));
}

// Does `target` lie in the span of `vs`?
inline bool in_span(const std::vector<Vec>& vs, const Vec& target) {
  std::vector<Vec> cols = vs;
  if (cols.empty()) {
    for (const auto& t : target)
      if (t != 0) return false;
    return true;
  }
  Matrix m = Matrix::from_rows(cols).transpose();
  return solve(m, target).has_value();
}

// Do two families of vectors span the same subspace?
inline bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  size_t da = span_dim(a), db = span_dim(b);
  if (da != db) return false;
  std::vector<Vec> joint = a;
  joint.insert(joint.end(), b.begin(), b.end());
  return span_dim(joint) == da;
}

}  // namespace linalg
