#pragma once

#include <cstddef>
#include <vector>

#include "pint/sparse.hpp"
#include "pint/vec.hpp"

namespace pint {

/// Dense row-major matrix. Used for propagator matrices and for the
/// direct fallback of the block stage solver.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {}

  static DenseMatrix identity(int n);
  static DenseMatrix from_sparse(const SparseMatrix& s);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  void multiply(const Vec& x, Vec& y) const;
  Vec multiply(const Vec& x) const;
  void multiply_transpose(const Vec& x, Vec& y) const;
  Vec multiply_transpose(const Vec& x) const;

  double* data() { return a_.data(); }
  const double* data() const { return a_.data(); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> a_;
};

/// LU factorization with partial pivoting of a square dense matrix.
/// Factorization is immutable after construction; solve() is const and
/// safe to call concurrently.
class DenseLU {
 public:
  explicit DenseLU(DenseMatrix a);

  int n() const { return lu_.rows(); }

  /// Solve A x = b.
  Vec solve(const Vec& b) const;

 private:
  DenseMatrix lu_;
  std::vector<int> piv_;
};

}  // namespace pint
