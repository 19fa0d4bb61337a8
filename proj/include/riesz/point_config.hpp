#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "riesz/geometry.hpp"

namespace riesz {

/// Ordered n-tuple of points in R^d, stored row-major. Order is significant:
/// Leja prefixes are prefixes of the stored sequence.
class PointConfig {
 public:
  PointConfig() = default;
  explicit PointConfig(std::size_t dim);
  PointConfig(std::size_t dim, std::vector<double> coords);

  static PointConfig from_points(const std::vector<Point>& points);

  std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  std::size_t dim() const { return dim_; }
  bool empty() const { return coords_.empty(); }

  PointView operator[](std::size_t i) const { return {coords_.data() + i * dim_, dim_}; }
  Point point(std::size_t i) const;

  void push_back(PointView p);
  void set(std::size_t i, PointView p);

  /// First `count` points, in order.
  PointConfig prefix(std::size_t count) const;

  const std::vector<double>& coords() const { return coords_; }

  bool operator==(const PointConfig&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
};

}  // namespace riesz
