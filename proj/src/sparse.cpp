#include "pint/sparse.hpp"

#include <algorithm>
#include <cmath>

#include "pint/errors.hpp"

namespace pint {

SparseMatrix SparseMatrix::from_triplets(int n, std::vector<Triplet> entries) {
  for (const Triplet& t : entries) {
    if (t.row < 0 || t.row >= n || t.col < 0 || t.col >= n)
      throw ConfigError("sparse triplet index out of range");
  }
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  SparseMatrix m;
  m.n_ = n;
  m.row_ptr_.assign(static_cast<std::size_t>(n) + 1, 0);
  m.col_.reserve(entries.size());
  m.val_.reserve(entries.size());
  for (std::size_t k = 0; k < entries.size();) {
    const int r = entries[k].row;
    const int c = entries[k].col;
    double v = 0.0;
    while (k < entries.size() && entries[k].row == r && entries[k].col == c)
      v += entries[k++].value;
    m.col_.push_back(c);
    m.val_.push_back(v);
    m.row_ptr_[static_cast<std::size_t>(r) + 1]++;
  }
  for (int i = 0; i < n; ++i) m.row_ptr_[i + 1] += m.row_ptr_[i];
  return m;
}

SparseMatrix SparseMatrix::diagonal_matrix(const Vec& d) {
  std::vector<Triplet> t;
  t.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    t.push_back({static_cast<int>(i), static_cast<int>(i), d[i]});
  return from_triplets(static_cast<int>(d.size()), std::move(t));
}

SparseMatrix SparseMatrix::identity(int n) { return diagonal_matrix(Vec(n, 1.0)); }

void SparseMatrix::multiply(const Vec& x, Vec& y) const {
  y.assign(n_, 0.0);
  for (int i = 0; i < n_; ++i) {
    double s = 0.0;
    for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) s += val_[k] * x[col_[k]];
    y[i] = s;
  }
}

Vec SparseMatrix::multiply(const Vec& x) const {
  Vec y;
  multiply(x, y);
  return y;
}

void SparseMatrix::multiply_transpose(const Vec& x, Vec& y) const {
  y.assign(n_, 0.0);
  for (int i = 0; i < n_; ++i)
    for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) y[col_[k]] += val_[k] * x[i];
}

Vec SparseMatrix::multiply_transpose(const Vec& x) const {
  Vec y;
  multiply_transpose(x, y);
  return y;
}

double SparseMatrix::coeff(int i, int j) const {
  for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
    if (col_[k] == j) return val_[k];
  return 0.0;
}

Vec SparseMatrix::diagonal() const {
  Vec d(n_, 0.0);
  for (int i = 0; i < n_; ++i) d[i] = coeff(i, i);
  return d;
}

bool SparseMatrix::is_symmetric(double rel_tol) const {
  const double scale = max_abs();
  double worst = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
      worst = std::max(worst, std::abs(val_[k] - coeff(col_[k], i)));
  return worst <= rel_tol * std::max(scale, 1e-300);
}

double SparseMatrix::max_abs() const {
  double m = 0.0;
  for (double v : val_) m = std::max(m, std::abs(v));
  return m;
}

double SparseMatrix::entry_sum() const {
  double s = 0.0;
  for (double v : val_) s += v;
  return s;
}

SparseMatrix add_scaled(const SparseMatrix& a, const SparseMatrix& b, double beta) {
  if (a.n() != b.n()) throw ConfigError("add_scaled: dimension mismatch");
  std::vector<Triplet> t;
  t.reserve(a.nnz() + b.nnz());
  a.for_each_entry([&](int i, int j, double v) { t.push_back({i, j, v}); });
  b.for_each_entry([&](int i, int j, double v) { t.push_back({i, j, beta * v}); });
  return SparseMatrix::from_triplets(a.n(), std::move(t));
}

}  // namespace pint
