#include "softgraph/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace softgraph {

NumericEigen numeric_spectrum(std::vector<std::vector<double>> a) {
  size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("non-square matrix");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (std::abs(a[i][j] - a[j][i]) > 1e-12 * (1.0 + std::abs(a[i][j])))
        throw std::invalid_argument("non-symmetric matrix");

  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; ++i) v[i][i] = 1.0;

  double norm = 0.0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) norm += a[i][j] * a[i][j];
  norm = std::sqrt(norm);
  const double target = (norm == 0.0 ? 0.0 : 1e-12 * norm);

  auto off = [&]() {
    double s = 0.0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) s += 2.0 * a[i][j] * a[i][j];
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 100 && off() > target; ++sweep) {
    for (size_t p = 0; p + 1 < n; ++p) {
      for (size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) <= 1e-300) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (size_t k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (size_t k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (size_t k = 0; k < n; ++k) {
          double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](size_t x, size_t y) { return a[x][x] < a[y][y]; });

  NumericEigen out;
  out.values.resize(n);
  out.vectors.assign(n, std::vector<double>(n, 0.0));
  for (size_t k = 0; k < n; ++k) {
    out.values[k] = a[order[k]][order[k]];
    for (size_t i = 0; i < n; ++i) out.vectors[k][i] = v[i][order[k]];
    double nrm = 0.0;
    for (double x : out.vectors[k]) nrm += x * x;
    nrm = std::sqrt(nrm);
    double sign = 1.0;
    for (double x : out.vectors[k])
      if (std::abs(x) > 1e-8 * nrm) {
        sign = (x > 0) ? 1.0 : -1.0;
        break;
      }
    for (double& x : out.vectors[k]) x *= sign / (nrm == 0 ? 1.0 : nrm);
  }
  return out;
}

NumericEigen numeric_spectrum(const Mat<Rat>& L) {
  if (!L.is_symmetric()) throw std::invalid_argument("non-symmetric matrix");
  std::vector<std::vector<double>> a(L.rows, std::vector<double>(L.cols, 0.0));
  for (int i = 0; i < L.rows; ++i)
    for (int j = 0; j < L.cols; ++j) a[i][j] = to_double(L.at(i, j));
  return numeric_spectrum(std::move(a));
}

}  // namespace softgraph
