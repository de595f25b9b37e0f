#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace pint {

using Vec = std::vector<double>;

inline double dot(const Vec& x, const Vec& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline double norm2(const Vec& x) { return std::sqrt(dot(x, x)); }

inline double norm_inf(const Vec& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

/// y += a*x
inline void axpy(double a, const Vec& x, Vec& y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

inline void scale(Vec& x, double a) {
  for (double& v : x) v *= a;
}

inline Vec operator+(const Vec& x, const Vec& y) {
  Vec r(x);
  axpy(1.0, y, r);
  return r;
}

inline Vec operator-(const Vec& x, const Vec& y) {
  Vec r(x);
  axpy(-1.0, y, r);
  return r;
}

}  // namespace pint
