#include "pint/dense.hpp"

#include <cmath>

#include "pint/errors.hpp"

namespace pint {

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::from_sparse(const SparseMatrix& s) {
  DenseMatrix m(s.n(), s.n());
  s.for_each_entry([&](int i, int j, double v) { m(i, j) += v; });
  return m;
}

void DenseMatrix::multiply(const Vec& x, Vec& y) const {
  y.assign(rows_, 0.0);
  for (int i = 0; i < rows_; ++i) {
    const double* row = a_.data() + static_cast<std::size_t>(i) * cols_;
    double s = 0.0;
    for (int j = 0; j < cols_; ++j) s += row[j] * x[j];
    y[i] = s;
  }
}

Vec DenseMatrix::multiply(const Vec& x) const {
  Vec y;
  multiply(x, y);
  return y;
}

void DenseMatrix::multiply_transpose(const Vec& x, Vec& y) const {
  y.assign(cols_, 0.0);
  for (int i = 0; i < rows_; ++i) {
    const double* row = a_.data() + static_cast<std::size_t>(i) * cols_;
    const double xi = x[i];
    for (int j = 0; j < cols_; ++j) y[j] += row[j] * xi;
  }
}

Vec DenseMatrix::multiply_transpose(const Vec& x) const {
  Vec y;
  multiply_transpose(x, y);
  return y;
}

DenseLU::DenseLU(DenseMatrix a) : lu_(std::move(a)) {
  if (lu_.rows() != lu_.cols()) throw ConfigError("DenseLU: matrix must be square");
  const int n = lu_.rows();
  piv_.resize(n);
  for (int k = 0; k < n; ++k) {
    int p = k;
    double best = std::abs(lu_(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double v = std::abs(lu_(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best == 0.0) throw SolverError("DenseLU: singular matrix", 0.0);
    piv_[k] = p;
    if (p != k)
      for (int j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
    const double pivot = lu_(k, k);
    for (int i = k + 1; i < n; ++i) {
      const double m = lu_(i, k) / pivot;
      lu_(i, k) = m;
      if (m != 0.0)
        for (int j = k + 1; j < n; ++j) lu_(i, j) -= m * lu_(k, j);
    }
  }
}

Vec DenseLU::solve(const Vec& b) const {
  const int n = lu_.rows();
  Vec x(b);
  for (int k = 0; k < n; ++k)
    if (piv_[k] != k) std::swap(x[k], x[piv_[k]]);
  for (int i = 1; i < n; ++i) {
    double s = x[i];
    for (int j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
    x[i] = s;
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = x[i];
    for (int j = i + 1; j < n; ++j) s -= lu_(i, j) * x[j];
    x[i] = s / lu_(i, i);
  }
  return x;
}

}  // namespace pint
