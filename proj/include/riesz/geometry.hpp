#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace riesz {

using Point = std::vector<double>;
using PointView = std::span<const double>;

inline double dot(PointView a, PointView b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double squared_norm(PointView a) { return dot(a, a); }
inline double norm(PointView a) { return std::sqrt(squared_norm(a)); }

inline double squared_distance(PointView a, PointView b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

inline double distance(PointView a, PointView b) { return std::sqrt(squared_distance(a, b)); }

inline Point subtract(PointView a, PointView b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Point axpy(double alpha, PointView x, PointView y) {
  Point r(y.begin(), y.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += alpha * x[i];
  return r;
}

inline Point unit_vector(std::size_t dim, std::size_t axis) {
  Point e(dim, 0.0);
  e[axis] = 1.0;
  return e;
}

}  // namespace riesz
