#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace dads {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

inline double norm_sq(const Vec& a) { return dot(a, a); }

inline double norm(const Vec& a) { return std::sqrt(norm_sq(a)); }

/// Positive part: max(x, 0). Exactly zero at and below zero.
inline double pos(double x) { return x > 0.0 ? x : 0.0; }

inline bool all_finite(const Vec& a) {
  for (double v : a)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace dads
