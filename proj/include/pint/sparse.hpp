#pragma once

#include <cstddef>
#include <vector>

#include "pint/vec.hpp"

namespace pint {

/// A (row, col, value) contribution used to build a SparseMatrix.
struct Triplet {
  int row;
  int col;
  double value;
};

/// Square sparse matrix in compressed-row storage. Immutable after
/// construction; matrix-vector products are const and safe to call
/// concurrently.
class SparseMatrix {
 public:
  SparseMatrix() = default;

  /// Build from triplets; duplicate (row, col) entries are summed.
  static SparseMatrix from_triplets(int n, std::vector<Triplet> entries);

  /// Diagonal matrix with the given entries.
  static SparseMatrix diagonal_matrix(const Vec& d);

  static SparseMatrix identity(int n);

  int n() const { return n_; }
  std::size_t nnz() const { return val_.size(); }

  /// y = A x
  void multiply(const Vec& x, Vec& y) const;
  Vec multiply(const Vec& x) const;

  /// y = A^T x
  void multiply_transpose(const Vec& x, Vec& y) const;
  Vec multiply_transpose(const Vec& x) const;

  /// Stored value at (i, j), zero if not stored.
  double coeff(int i, int j) const;

  Vec diagonal() const;

  /// max_ij |a_ij - a_ji| <= tol * max_ij |a_ij|
  bool is_symmetric(double rel_tol) const;

  double max_abs() const;

  /// Sum of all stored entries.
  double entry_sum() const;

  template <typename F>
  void for_each_entry(F&& f) const {
    for (int i = 0; i < n_; ++i)
      for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) f(i, col_[k], val_[k]);
  }

  const std::vector<int>& row_ptr() const { return row_ptr_; }
  const std::vector<int>& col_idx() const { return col_; }
  const std::vector<double>& values() const { return val_; }

 private:
  int n_ = 0;
  std::vector<int> row_ptr_{0};
  std::vector<int> col_;
  std::vector<double> val_;
};

/// A + beta * B (patterns may differ).
SparseMatrix add_scaled(const SparseMatrix& a, const SparseMatrix& b, double beta);

}  // namespace pint
