#include "pint/solvers.hpp"

#include <cmath>
#include <random>

#include "pint/dense.hpp"
#include "pint/errors.hpp"

namespace pint {

namespace {

struct PcgResult {
  Vec x;
  double rel_residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Jacobi-preconditioned CG. Never throws; the caller decides whether an
// unconverged result is an error (solve_spd) or acceptable (inner
// preconditioner solves).
PcgResult pcg(const SparseMatrix& a, const Vec& b, double rel_tol, int max_iter,
              const Vec* x0) {
  const int n = a.n();
  PcgResult res;
  res.x = x0 ? *x0 : Vec(n, 0.0);

  const double bnorm = norm2(b);
  if (bnorm == 0.0) {
    res.x.assign(n, 0.0);
    res.converged = true;
    return res;
  }
  const double target = rel_tol * bnorm;

  Vec inv_diag = a.diagonal();
  for (double& v : inv_diag) v = (v > 0.0) ? 1.0 / v : 1.0;

  Vec r(n), z(n), p(n), q(n);
  a.multiply(res.x, q);
  for (int i = 0; i < n; ++i) r[i] = b[i] - q[i];

  double rn = norm2(r);
  if (rn <= target) {
    res.rel_residual = rn / bnorm;
    res.converged = true;
    return res;
  }

  for (int i = 0; i < n; ++i) z[i] = inv_diag[i] * r[i];
  p = z;
  double rz = dot(r, z);

  for (int it = 1; it <= max_iter; ++it) {
    res.iterations = it;
    a.multiply(p, q);
    const double pq = dot(p, q);
    if (pq <= 0.0 || rz == 0.0) break;  // breakdown: matrix not SPD on this subspace
    const double alpha = rz / pq;
    axpy(alpha, p, res.x);
    axpy(-alpha, q, r);
    rn = norm2(r);
    if (rn <= target) {
      // guard against recurrence drift with a true residual
      a.multiply(res.x, q);
      for (int i = 0; i < n; ++i) r[i] = b[i] - q[i];
      rn = norm2(r);
      if (rn <= target) {
        res.rel_residual = rn / bnorm;
        res.converged = true;
        return res;
      }
      for (int i = 0; i < n; ++i) z[i] = inv_diag[i] * r[i];
      p = z;
      rz = dot(r, z);
      continue;
    }
    for (int i = 0; i < n; ++i) z[i] = inv_diag[i] * r[i];
    const double rz_new = dot(r, z);
    const double beta = rz_new / rz;
    rz = rz_new;
    for (int i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
  }
  res.rel_residual = rn / bnorm;
  return res;
}

int effective_max_iter(const SolverConfig& cfg, int n) {
  return cfg.max_iter > 0 ? cfg.max_iter : 10 * std::max(n, 10);
}

void split(const Vec& x, Vec& x1, Vec& x2) {
  const std::size_t d = x.size() / 2;
  x1.assign(x.begin(), x.begin() + d);
  x2.assign(x.begin() + d, x.end());
}

Vec join(const Vec& x1, const Vec& x2) {
  Vec x;
  x.reserve(x1.size() + x2.size());
  x.insert(x.end(), x1.begin(), x1.end());
  x.insert(x.end(), x2.begin(), x2.end());
  return x;
}

}  // namespace

Vec solve_spd(const SparseMatrix& a, const Vec& rhs, const SolverConfig& cfg,
              const Vec* x0) {
  if (static_cast<int>(rhs.size()) != a.n())
    throw ConfigError("solve_spd: dimension mismatch");
  PcgResult res = pcg(a, rhs, cfg.rel_tol, effective_max_iter(cfg, a.n()), x0);
  if (!res.converged)
    throw SolverError("solve_spd: CG did not converge, relative residual " +
                          std::to_string(res.rel_residual),
                      res.rel_residual);
  return std::move(res.x);
}

Vec fgmres(int n, const LinOp& apply, const LinOp& precond, const Vec& b,
           double rel_tol, int max_iter, int restart, const Vec* x0) {
  const double bnorm = norm2(b);
  if (bnorm == 0.0) return Vec(n, 0.0);
  const double target = rel_tol * bnorm;
  const int m = std::max(1, std::min(restart, n));

  Vec x = x0 ? *x0 : Vec(n, 0.0);
  Vec r(n), w(n);
  int total = 0;

  while (true) {
    apply(x, w);
    for (int i = 0; i < n; ++i) r[i] = b[i] - w[i];
    const double beta = norm2(r);
    if (beta <= target) return x;
    if (total >= max_iter)
      throw SolverError("fgmres: no convergence, relative residual " +
                            std::to_string(beta / bnorm),
                        beta / bnorm);

    std::vector<Vec> v;
    std::vector<Vec> z;
    v.reserve(m + 1);
    z.reserve(m);
    v.push_back(r);
    scale(v[0], 1.0 / beta);

    std::vector<std::vector<double>> h;  // h[j] holds column j, rotated in place
    std::vector<double> cs(m), sn(m), g(m + 1, 0.0);
    g[0] = beta;

    int cols = 0;
    for (int j = 0; j < m; ++j) {
      z.emplace_back(n);
      precond(v[j], z[j]);
      apply(z[j], w);
      ++total;

      std::vector<double> hj(j + 2, 0.0);
      for (int i = 0; i <= j; ++i) {
        hj[i] = dot(w, v[i]);
        axpy(-hj[i], v[i], w);
      }
      hj[j + 1] = norm2(w);
      const bool breakdown = hj[j + 1] == 0.0;
      if (!breakdown) {
        v.push_back(w);
        scale(v.back(), 1.0 / hj[j + 1]);
      }

      for (int i = 0; i < j; ++i) {
        const double t = cs[i] * hj[i] + sn[i] * hj[i + 1];
        hj[i + 1] = -sn[i] * hj[i] + cs[i] * hj[i + 1];
        hj[i] = t;
      }
      const double denom = std::hypot(hj[j], hj[j + 1]);
      if (denom == 0.0)
        throw SolverError("fgmres: singular Hessenberg column", beta / bnorm);
      cs[j] = hj[j] / denom;
      sn[j] = hj[j + 1] / denom;
      hj[j] = denom;
      hj[j + 1] = 0.0;
      g[j + 1] = -sn[j] * g[j];
      g[j] = cs[j] * g[j];
      h.push_back(std::move(hj));
      cols = j + 1;

      if (std::abs(g[j + 1]) <= target || breakdown || total >= max_iter) break;
    }

    // back substitution on the rotated Hessenberg system
    std::vector<double> y(cols, 0.0);
    for (int i = cols - 1; i >= 0; --i) {
      double s = g[i];
      for (int k = i + 1; k < cols; ++k) s -= h[k][i] * y[k];
      y[i] = s / h[i][i];
    }
    for (int i = 0; i < cols; ++i) axpy(y[i], z[i], x);
    // loop repeats: true residual is recomputed at the top
  }
}

std::pair<Vec, Vec> solve_block2_iterative(const SparseMatrix& a11,
                                           const SparseMatrix& a12,
                                           const SparseMatrix& a21,
                                           const SparseMatrix& a22, const Vec& b1,
                                           const Vec& b2, const SolverConfig& cfg) {
  const int d = a11.n();
  const int n = 2 * d;
  // loose inner solves; flexible GMRES tolerates the varying preconditioner
  const double inner_tol = 1e-3;
  const int inner_cap = std::max(50, 2 * d);

  LinOp apply = [&](const Vec& x, Vec& y) {
    Vec x1, x2;
    split(x, x1, x2);
    Vec t = a11.multiply(x1);
    axpy(1.0, a12.multiply(x2), t);
    Vec s = a21.multiply(x1);
    axpy(1.0, a22.multiply(x2), s);
    y = join(t, s);
  };
  LinOp precond = [&](const Vec& r, Vec& zv) {
    Vec r1, r2;
    split(r, r1, r2);
    zv = join(pcg(a11, r1, inner_tol, inner_cap, nullptr).x,
              pcg(a22, r2, inner_tol, inner_cap, nullptr).x);
  };

  const Vec b = join(b1, b2);
  Vec x = fgmres(n, apply, precond, b, cfg.rel_tol, effective_max_iter(cfg, n),
                 std::min(200, n), nullptr);
  std::pair<Vec, Vec> out;
  split(x, out.first, out.second);
  return out;
}

std::pair<Vec, Vec> solve_block2(const SparseMatrix& a11, const SparseMatrix& a12,
                                 const SparseMatrix& a21, const SparseMatrix& a22,
                                 const Vec& b1, const Vec& b2,
                                 const SolverConfig& cfg) {
  const int d = a11.n();
  if (a12.n() != d || a21.n() != d || a22.n() != d ||
      static_cast<int>(b1.size()) != d || static_cast<int>(b2.size()) != d)
    throw ConfigError("solve_block2: dimension mismatch");

  if (d > cfg.block_dense_limit)
    return solve_block2_iterative(a11, a12, a21, a22, b1, b2, cfg);

  DenseMatrix full(2 * d, 2 * d);
  a11.for_each_entry([&](int i, int j, double v) { full(i, j) += v; });
  a12.for_each_entry([&](int i, int j, double v) { full(i, j + d) += v; });
  a21.for_each_entry([&](int i, int j, double v) { full(i + d, j) += v; });
  a22.for_each_entry([&](int i, int j, double v) { full(i + d, j + d) += v; });
  const Vec x = DenseLU(std::move(full)).solve(join(b1, b2));
  std::pair<Vec, Vec> out;
  split(x, out.first, out.second);
  return out;
}

SigmaEstimate max_singular_value(const LinOp& apply, const LinOp& apply_transpose,
                                 int dim, double tol, int max_iter) {
  if (max_iter <= 0) max_iter = std::max(200, 10 * dim);

  std::mt19937 gen(20240611u);
  auto uniform = [&gen]() { return 2.0 * (gen() / 4294967296.0) - 1.0; };

  Vec v(dim);
  for (double& e : v) e = uniform();
  scale(v, 1.0 / norm2(v));

#ifndef NDEBUG
  {
    // adjoint consistency spot check
    Vec xx(dim), yy(dim), ax(dim), aty(dim);
    for (double& e : xx) e = uniform();
    for (double& e : yy) e = uniform();
    apply(xx, ax);
    apply_transpose(yy, aty);
    if (std::abs(dot(ax, yy) - dot(xx, aty)) > 1e-10 * norm2(xx) * norm2(yy))
      throw ConfigError("max_singular_value: operators are not an adjoint pair");
  }
#endif

  SigmaEstimate est;
  Vec w(dim), u(dim);
  double sigma_prev = -1.0;
  for (int it = 1; it <= max_iter; ++it) {
    est.iterations = it;
    apply(v, w);
    const double sigma = norm2(w);
    est.value = sigma;
    if (sigma == 0.0) {
      est.converged = true;  // operator annihilates the iterate (e.g. G == F)
      return est;
    }
    if (sigma_prev >= 0.0 && std::abs(sigma - sigma_prev) <= tol * sigma) {
      est.converged = true;
      return est;
    }
    sigma_prev = sigma;
    apply_transpose(w, u);
    const double un = norm2(u);
    if (un == 0.0) {
      est.converged = true;
      return est;
    }
    v = u;
    scale(v, 1.0 / un);
  }
  return est;  // converged stays false, best estimate retained
}

double erf_value(double x) { return std::erf(x); }

}  // namespace pint
