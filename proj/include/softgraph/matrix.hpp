#pragma once

#include <stdexcept>
#include <vector>

#include "softgraph/rational.hpp"

namespace softgraph {

// Small dense matrix, exact scalar types (Rat, Quad) or double.
template <class T>
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<T> v;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), v(static_cast<size_t>(r) * c, T(0)) {}

  T& at(int r, int c) { return v[static_cast<size_t>(r) * cols + c]; }
  const T& at(int r, int c) const { return v[static_cast<size_t>(r) * cols + c]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  Mat transpose() const {
    Mat t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix size mismatch");
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        const T& f = x.at(i, k);
        if (scalar_is_zero(f)) continue;
        for (int j = 0; j < y.cols; ++j) r.at(i, j) += f * y.at(k, j);
      }
    return r;
  }

  friend Mat operator+(Mat x, const Mat& y) {
    for (size_t i = 0; i < x.v.size(); ++i) x.v[i] += y.v[i];
    return x;
  }
  friend Mat operator-(Mat x, const Mat& y) {
    for (size_t i = 0; i < x.v.size(); ++i) x.v[i] -= y.v[i];
    return x;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) return false;
    for (size_t i = 0; i < x.v.size(); ++i)
      if (!(x.v[i] == y.v[i])) return false;
    return true;
  }

  std::vector<T> operator*(const std::vector<T>& x) const {
    if (static_cast<int>(x.size()) != cols)
      throw std::invalid_argument("matvec size mismatch");
    std::vector<T> r(rows, T(0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (!scalar_is_zero(at(i, j))) r[i] += at(i, j) * x[j];
    return r;
  }

  bool is_symmetric() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
      for (int j = i + 1; j < cols; ++j)
        if (!(at(i, j) == at(j, i))) return false;
    return true;
  }
};

// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<int> rref(Mat<T>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int i = row; i < m.rows; ++i)
      if (!scalar_is_zero(m.at(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
    T inv = T(1) / m.at(row, col);
    for (int j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || scalar_is_zero(m.at(i, col))) continue;
      T f = m.at(i, col);
      for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Exact nullspace basis; one vector per free column, deterministic order.
template <class T>
std::vector<std::vector<T>> nullspace(Mat<T> m) {
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> x(m.cols, T(0));
    x[free] = T(1);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m.at(static_cast<int>(r), free);
    basis.push_back(std::move(x));
  }
  return basis;
}

// Solves m*x = rhs exactly; empty result means inconsistent. When the
// solution space has free variables the particular solution with zero
// free variables is returned, together with the homogeneous basis.
template <class T>
struct LinearSolution {
  bool consistent = false;
  std::vector<T> particular;
  std::vector<std::vector<T>> homogeneous;
};

template <class T>
LinearSolution<T> solve_linear(const Mat<T>& m, const std::vector<T>& rhs) {
  Mat<T> aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = rhs[i];
  }
  std::vector<int> pivots = rref(aug);
  LinearSolution<T> sol;
  for (int p : pivots)
    if (p == m.cols) return sol;  // pivot in rhs column: inconsistent
  sol.consistent = true;
  sol.particular.assign(m.cols, T(0));
  for (size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug.at(static_cast<int>(r), m.cols);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> x(m.cols, T(0));
    x[free] = T(1);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -aug.at(static_cast<int>(r), free);
    sol.homogeneous.push_back(std::move(x));
  }
  return sol;
}

template <class T>
Mat<T> inverse(const Mat<T>& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square");
  Mat<T> aug(m.rows, 2 * m.cols);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols + i) = T(1);
  }
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != m.rows)
    throw std::domain_error("singular matrix");
  Mat<T> inv(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
  return inv;
}

}  // namespace softgraph
