#include "riesz/point_config.hpp"

#include <cmath>
#include <stdexcept>

namespace riesz {

namespace {

void require_finite(PointView p) {
  for (double v : p) {
    if (!std::isfinite(v)) throw std::invalid_argument("point coordinates must be finite");
  }
}

}  // namespace

PointConfig::PointConfig(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("PointConfig dimension must be positive");
}

PointConfig::PointConfig(std::size_t dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
  if (dim == 0) throw std::invalid_argument("PointConfig dimension must be positive");
  if (coords_.size() % dim != 0) {
    throw std::invalid_argument("coordinate count is not a multiple of the dimension");
  }
  require_finite(coords_);
}

PointConfig PointConfig::from_points(const std::vector<Point>& points) {
  if (points.empty()) throw std::invalid_argument("from_points needs at least one point");
  PointConfig out(points.front().size());
  out.coords_.reserve(points.size() * out.dim_);
  for (const auto& p : points) out.push_back(p);
  return out;
}

Point PointConfig::point(std::size_t i) const {
  const auto v = (*this)[i];
  return Point(v.begin(), v.end());
}

void PointConfig::push_back(PointView p) {
  if (p.size() != dim_) throw std::invalid_argument("point dimension mismatch");
  require_finite(p);
  coords_.insert(coords_.end(), p.begin(), p.end());
}

void PointConfig::set(std::size_t i, PointView p) {
  if (p.size() != dim_) throw std::invalid_argument("point dimension mismatch");
  if (i >= size()) throw std::out_of_range("point index out of range");
  require_finite(p);
  std::copy(p.begin(), p.end(), coords_.begin() + static_cast<std::ptrdiff_t>(i * dim_));
}

PointConfig PointConfig::prefix(std::size_t count) const {
  if (count > size()) throw std::out_of_range("prefix longer than configuration");
  return PointConfig(dim_, std::vector<double>(coords_.begin(),
                                               coords_.begin() + static_cast<std::ptrdiff_t>(count * dim_)));
}

}  // namespace riesz
