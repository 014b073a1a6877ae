#pragma once

// Exact dense and sparse linear algebra over Scalar: Gauss-Jordan inverse,
// kernel bases in echelon form, and an incremental sparse row reducer that
// produces canonical reduced row-echelon spans (so two spans are equal iff
// their canonical rows are identical).

#include "scalar.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace colorpbw {

class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
      }
    return true;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        if (x.at(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) {
          if (y.at(k, j).is_zero()) continue;
          r.at(i, j) += x.at(i, k) * y.at(k, j);
        }
      }
    return r;
  }

  friend Matrix operator*(const Scalar& s, const Matrix& y) {
    Matrix r = y;
    for (auto& v : r.a_) v *= s;
    return r;
  }

  // Matrix * vector, both dense.
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix/vector shape mismatch");
    std::vector<Scalar> r(rows_, Scalar(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
  }

  std::vector<Scalar> column(std::size_t j) const {
    std::vector<Scalar> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

inline Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("only square matrices invert");
  std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a.at(piv, col).is_zero()) ++piv;
    if (piv == n) throw std::invalid_argument("matrix is singular");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    Scalar d = a.at(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) *= d;
      inv.at(col, j) *= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a.at(i, col).is_zero()) continue;
      Scalar f = a.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

// Kernel of m as an echelon basis: one vector per free column, with a 1 in
// the free position.
inline std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  Matrix a = m;
  std::vector<long> pivot_of_col(cols, -1);
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && a.at(piv, col).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
    Scalar d = a.at(r, col).inverse();
    for (std::size_t j = 0; j < cols; ++j) a.at(r, j) *= d;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a.at(i, col).is_zero()) continue;
      Scalar f = a.at(i, col);
      for (std::size_t j = 0; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivot_of_col[col] = static_cast<long>(r);
    ++r;
  }
  std::vector<std::vector<Scalar>> kernel;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (pivot_of_col[free_col] >= 0) continue;
    std::vector<Scalar> v(cols, Scalar(0));
    v[free_col] = Scalar(1);
    for (std::size_t col = 0; col < cols; ++col)
      if (pivot_of_col[col] >= 0)
        v[col] = -a.at(static_cast<std::size_t>(pivot_of_col[col]), free_col);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

// Sparse row: sorted (column, nonzero value) pairs.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

inline SparseRow sparse_axpy(const SparseRow& x, const Scalar& c, const SparseRow& y) {
  // x + c*y with cancellation removed
  SparseRow r;
  r.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      r.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      Scalar v = c * y[j].second;
      if (!v.is_zero()) r.emplace_back(y[j].first, std::move(v));
      ++j;
    } else {
      Scalar v = x[i].second + c * y[j].second;
      if (!v.is_zero()) r.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

// Incremental reduced row echelon form with leading coefficients normalised
// to 1.  Inserted rows are fully reduced against existing pivots and existing
// rows against new pivots, so canonical_rows() is a basis-independent
// invariant of the row span.
class RowReducer {
 public:
  // Returns true when the row enlarged the span.
  bool add_row(SparseRow row) {
    reduce(row);
    if (row.empty()) return false;
    Scalar lead_inv = row.front().second.inverse();
    for (auto& [c, v] : row) v *= lead_inv;
    std::size_t pivot_col = row.front().first;
    for (auto& existing : rows_) {
      Scalar coeff = coefficient(existing, pivot_col);
      if (!coeff.is_zero()) existing = sparse_axpy(existing, -coeff, row);
    }
    pivots_[pivot_col] = rows_.size();
    rows_.push_back(std::move(row));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

  // Rows sorted by pivot column; unique per span.
  std::vector<SparseRow> canonical_rows() const {
    std::vector<SparseRow> out;
    out.reserve(rows_.size());
    for (const auto& [col, idx] : pivots_) out.push_back(rows_[idx]);
    return out;
  }

 private:
  void reduce(SparseRow& row) const {
    // Stored pivot rows are zero at every other pivot column, so one
    // left-to-right sweep clears all pivot columns from the row.
    for (std::size_t k = 0; k < row.size();) {
      auto it = pivots_.find(row[k].first);
      if (it == pivots_.end()) {
        ++k;
        continue;
      }
      row = sparse_axpy(row, -row[k].second, rows_[it->second]);
    }
  }

  static Scalar coefficient(const SparseRow& row, std::size_t col) {
    for (const auto& [c, v] : row) {
      if (c == col) return v;
      if (c > col) break;
    }
    return Scalar(0);
  }

  std::map<std::size_t, std::size_t> pivots_;  // pivot column -> row index
  std::vector<SparseRow> rows_;
};

}  // namespace colorpbw
