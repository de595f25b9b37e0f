#pragma once

#include <functional>
#include <utility>

#include "pint/sparse.hpp"
#include "pint/vec.hpp"

namespace pint {

struct SolverConfig {
  /// Relative residual tolerance for accepted solutions.
  double rel_tol = 1e-12;
  /// Iteration cap; 0 means 10 * dimension.
  int max_iter = 0;
  /// Block systems with d <= this limit are solved by a dense LU of the
  /// assembled 2d x 2d matrix instead of the Krylov route.
  int block_dense_limit = 2000;
};

/// Conjugate gradients with Jacobi preconditioning for SPD systems.
/// Returns x with ||A x - rhs||_2 <= rel_tol * ||rhs||_2. An optional
/// warm-start x0 only changes the iteration count, not the contract.
Vec solve_spd(const SparseMatrix& a, const Vec& rhs, const SolverConfig& cfg = {},
              const Vec* x0 = nullptr);

/// Solve the 2d x 2d block system
///   [A11 A12] [x1]   [b1]
///   [A21 A22] [x2] = [b2]
/// to a joint relative residual of rel_tol. Small systems go through a
/// dense LU; larger ones through flexible GMRES with block-diagonal
/// preconditioning by SPD solves of A11 and A22.
std::pair<Vec, Vec> solve_block2(const SparseMatrix& a11, const SparseMatrix& a12,
                                 const SparseMatrix& a21, const SparseMatrix& a22,
                                 const Vec& b1, const Vec& b2,
                                 const SolverConfig& cfg = {});

/// The Krylov route of solve_block2, independent of block_dense_limit.
std::pair<Vec, Vec> solve_block2_iterative(const SparseMatrix& a11,
                                           const SparseMatrix& a12,
                                           const SparseMatrix& a21,
                                           const SparseMatrix& a22, const Vec& b1,
                                           const Vec& b2, const SolverConfig& cfg = {});

using LinOp = std::function<void(const Vec&, Vec&)>;

/// Flexible right-preconditioned GMRES. precond may change between
/// applications (inexact inner solves). Throws SolverError if the true
/// residual cannot be brought below rel_tol * ||b|| within max_iter
/// operator applications.
Vec fgmres(int n, const LinOp& apply, const LinOp& precond, const Vec& b,
           double rel_tol, int max_iter, int restart, const Vec* x0 = nullptr);

struct SigmaEstimate {
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// Largest singular value via power iteration on the Gram operator
/// A^T A, started from a fixed seeded pseudo-random vector. Converged
/// when the estimate's relative change drops below tol; otherwise the
/// best estimate is returned flagged as unconverged.
SigmaEstimate max_singular_value(const LinOp& apply, const LinOp& apply_transpose,
                                 int dim, double tol = 1e-8, int max_iter = 0);

/// Error function, accurate to well below 1e-7 absolute, odd by
/// construction.
double erf_value(double x);

}  // namespace pint
