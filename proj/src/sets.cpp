#include "riesz/sets.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "riesz/rng.hpp"

namespace riesz {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void validate_ball(const Point& center, double radius, const char* what) {
  if (center.empty()) throw std::invalid_argument(std::string(what) + " center is empty");
  for (double c : center) {
    if (!std::isfinite(c)) throw std::invalid_argument(std::string(what) + " center must be finite");
  }
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument(std::string(what) + " radius must be positive");
  }
}

std::size_t validate(const Shape& shape) {
  return std::visit(
      Overloaded{
          [](const Ball& b) {
            validate_ball(b.center, b.radius, "ball");
            return b.center.size();
          },
          [](const SphereSurface& s) {
            validate_ball(s.center, s.radius, "sphere");
            return s.center.size();
          },
          [](const Box& b) {
            if (b.lower.empty() || b.lower.size() != b.upper.size()) {
              throw std::invalid_argument("box corners must be nonempty and of equal dimension");
            }
            for (std::size_t i = 0; i < b.lower.size(); ++i) {
              if (!std::isfinite(b.lower[i]) || !std::isfinite(b.upper[i]) || !(b.lower[i] < b.upper[i])) {
                throw std::invalid_argument("box requires finite lower < upper in every coordinate");
              }
            }
            return b.lower.size();
          },
          [](const BallUnion& u) {
            if (u.balls.empty()) throw std::invalid_argument("union needs at least one ball");
            const std::size_t d = u.balls.front().center.size();
            for (const auto& b : u.balls) {
              validate_ball(b.center, b.radius, "union ball");
              if (b.center.size() != d) throw std::invalid_argument("union balls differ in dimension");
            }
            return d;
          },
      },
      shape);
}

Point radial_projection(const Point& center, double radius, PointView x) {
  Point d = subtract(x, center);
  const double r = norm(d);
  if (r == 0.0) return axpy(radius, unit_vector(center.size(), 0), center);
  return axpy(radius / r, d, center);
}

// Rotation taking the Fibonacci lattice to a seeded random orientation.
std::array<double, 9> random_rotation(Rng& rng) {
  const double u1 = uniform01(rng), u2 = uniform01(rng), u3 = uniform01(rng);
  const double two_pi = 2.0 * std::numbers::pi;
  const double a = std::sqrt(1.0 - u1), b = std::sqrt(u1);
  const double qx = a * std::sin(two_pi * u2), qy = a * std::cos(two_pi * u2);
  const double qz = b * std::sin(two_pi * u3), qw = b * std::cos(two_pi * u3);
  return {1 - 2 * (qy * qy + qz * qz), 2 * (qx * qy - qz * qw),     2 * (qx * qz + qy * qw),
          2 * (qx * qy + qz * qw),     1 - 2 * (qx * qx + qz * qz), 2 * (qy * qz - qx * qw),
          2 * (qx * qz - qy * qw),     2 * (qy * qz + qx * qw),     1 - 2 * (qx * qx + qy * qy)};
}

// Quasi-uniform directions: rotated spherical Fibonacci lattice in 3D,
// independent uniform draws otherwise.
std::vector<Point> covering_directions(std::size_t dim, std::size_t count, Rng& rng) {
  std::vector<Point> dirs;
  dirs.reserve(count);
  if (dim != 3) {
    for (std::size_t i = 0; i < count; ++i) dirs.push_back(random_unit_vector(rng, dim));
    return dirs;
  }
  const auto rot = random_rotation(rng);
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double n = static_cast<double>(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / n;
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * static_cast<double>(i);
    const double p[3] = {rho * std::cos(phi), rho * std::sin(phi), z};
    Point v(3);
    for (int r = 0; r < 3; ++r) v[r] = rot[3 * r] * p[0] + rot[3 * r + 1] * p[1] + rot[3 * r + 2] * p[2];
    const double inv = 1.0 / norm(v);
    for (auto& c : v) c *= inv;
    dirs.push_back(std::move(v));
  }
  return dirs;
}

Point sphere_point(const Point& center, double radius, PointView direction) {
  return axpy(radius, direction, center);
}

Point uniform_on_box_surface(const Box& box, Rng& rng) {
  const std::size_t d = box.lower.size();
  // Face pair i (normal along axis i) has area prod_{j != i} width_j.
  std::vector<double> areas(d);
  double total = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    double a = 1.0;
    for (std::size_t j = 0; j < d; ++j) {
      if (j != i) a *= box.upper[j] - box.lower[j];
    }
    areas[i] = a;
    total += a;
  }
  double pick = uniform01(rng) * total;
  std::size_t axis = d - 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (pick < areas[i]) {
      axis = i;
      break;
    }
    pick -= areas[i];
  }
  Point x(d);
  for (std::size_t j = 0; j < d; ++j) x[j] = box.lower[j] + uniform01(rng) * (box.upper[j] - box.lower[j]);
  x[axis] = uniform01(rng) < 0.5 ? box.lower[axis] : box.upper[axis];
  return x;
}

std::size_t pick_weighted(const std::vector<double>& weights, Rng& rng) {
  double total = 0.0;
  for (double w : weights) total += w;
  double pick = uniform01(rng) * total;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (pick < weights[i]) return i;
    pick -= weights[i];
  }
  return weights.size() - 1;
}

std::size_t covering_count(const BallUnion& u, PointView x) {
  std::size_t m = 0;
  for (const auto& b : u.balls) {
    if (distance(x, b.center) <= b.radius) ++m;
  }
  return m;
}

Point uniform_in_union(const BallUnion& u, std::size_t dim, Rng& rng) {
  std::vector<double> volumes;
  for (const auto& b : u.balls) volumes.push_back(std::pow(b.radius, static_cast<double>(dim)));
  for (;;) {
    const auto& b = u.balls[pick_weighted(volumes, rng)];
    Point x = axpy(b.radius, random_in_unit_ball(rng, dim), b.center);
    const std::size_t m = std::max<std::size_t>(1, covering_count(u, x));
    if (m == 1 || uniform01(rng) * static_cast<double>(m) < 1.0) return x;
  }
}

Point outer_boundary_point_of_union(const BallUnion& u, std::size_t dim, Rng& rng) {
  std::vector<double> areas;
  for (const auto& b : u.balls) areas.push_back(std::pow(b.radius, static_cast<double>(dim - 1)));
  for (std::size_t attempt = 0; attempt < 10000; ++attempt) {
    const std::size_t i = pick_weighted(areas, rng);
    const auto& b = u.balls[i];
    Point x = sphere_point(b.center, b.radius, random_unit_vector(rng, dim));
    bool buried = false;
    for (std::size_t j = 0; j < u.balls.size() && !buried; ++j) {
      if (j != i && distance(x, u.balls[j].center) < u.balls[j].radius) buried = true;
    }
    if (!buried) return x;
  }
  return uniform_in_union(u, dim, rng);
}

}  // namespace

CompactSetModel::CompactSetModel(Shape shape)
    : CompactSetModel(std::move(shape), std::optional<HolderData>{}) {
  if (!std::holds_alternative<BallUnion>(shape_)) holder_ = HolderData{1.0, 1.0};
}

CompactSetModel::CompactSetModel(Shape shape, std::optional<HolderData> holder)
    : shape_(std::move(shape)), holder_(holder) {
  dim_ = validate(shape_);
  if (holder_ && !(holder_->A > 0.0 && holder_->s > 0.0 && holder_->s <= 1.0)) {
    throw std::invalid_argument("Hoelder data requires A > 0 and 0 < s <= 1");
  }
  std::visit(Overloaded{
                 [&](const Ball& b) {
                   enclosing_center_ = b.center;
                   enclosing_radius_ = b.radius;
                   diameter_ = 2.0 * b.radius;
                 },
                 [&](const SphereSurface& s) {
                   enclosing_center_ = s.center;
                   enclosing_radius_ = s.radius;
                   diameter_ = 2.0 * s.radius;
                 },
                 [&](const Box& b) {
                   enclosing_center_.resize(dim_);
                   for (std::size_t i = 0; i < dim_; ++i) enclosing_center_[i] = 0.5 * (b.lower[i] + b.upper[i]);
                   diameter_ = riesz::distance(b.lower, b.upper);
                   enclosing_radius_ = 0.5 * diameter_;
                 },
                 [&](const BallUnion& u) {
                   enclosing_center_.assign(dim_, 0.0);
                   for (const auto& b : u.balls) {
                     for (std::size_t i = 0; i < dim_; ++i) enclosing_center_[i] += b.center[i];
                   }
                   for (auto& c : enclosing_center_) c /= static_cast<double>(u.balls.size());
                   for (const auto& b : u.balls) {
                     enclosing_radius_ = std::max(enclosing_radius_, riesz::distance(b.center, enclosing_center_) + b.radius);
                   }
                   for (const auto& a : u.balls) {
                     for (const auto& b : u.balls) {
                       diameter_ = std::max(diameter_, riesz::distance(a.center, b.center) + a.radius + b.radius);
                     }
                   }
                 },
             },
             shape_);
}

CompactSetModel CompactSetModel::unit_sphere(std::size_t dim) {
  return CompactSetModel(SphereSurface{Point(dim, 0.0), 1.0});
}

CompactSetModel CompactSetModel::unit_ball(std::size_t dim) { return CompactSetModel(Ball{Point(dim, 0.0), 1.0}); }

std::string_view CompactSetModel::shape_name() const {
  return std::visit(Overloaded{
                        [](const Ball&) { return std::string_view("ball"); },
                        [](const SphereSurface&) { return std::string_view("sphere"); },
                        [](const Box&) { return std::string_view("box"); },
                        [](const BallUnion&) { return std::string_view("union"); },
                    },
                    shape_);
}

double CompactSetModel::distance(PointView x) const {
  if (x.size() != dim_) throw std::invalid_argument("point dimension does not match set dimension");
  return std::visit(Overloaded{
                        [&](const Ball& b) { return std::max(riesz::distance(x, b.center) - b.radius, 0.0); },
                        [&](const SphereSurface& s) { return std::abs(riesz::distance(x, s.center) - s.radius); },
                        [&](const Box& b) {
                          double s2 = 0.0;
                          for (std::size_t i = 0; i < dim_; ++i) {
                            const double excess = std::max({b.lower[i] - x[i], x[i] - b.upper[i], 0.0});
                            s2 += excess * excess;
                          }
                          return std::sqrt(s2);
                        },
                        [&](const BallUnion& u) {
                          double best = std::numeric_limits<double>::infinity();
                          for (const auto& b : u.balls) {
                            best = std::min(best, std::max(riesz::distance(x, b.center) - b.radius, 0.0));
                          }
                          return best;
                        },
                    },
                    shape_);
}

Point CompactSetModel::project(PointView x) const {
  if (x.size() != dim_) throw std::invalid_argument("point dimension does not match set dimension");
  return std::visit(Overloaded{
                        [&](const Ball& b) {
                          if (riesz::distance(x, b.center) <= b.radius) return Point(x.begin(), x.end());
                          return radial_projection(b.center, b.radius, x);
                        },
                        [&](const SphereSurface& s) {
                          if (riesz::distance(x, s.center) == s.radius) return Point(x.begin(), x.end());
                          return radial_projection(s.center, s.radius, x);
                        },
                        [&](const Box& b) {
                          Point p(x.begin(), x.end());
                          for (std::size_t i = 0; i < dim_; ++i) p[i] = std::clamp(p[i], b.lower[i], b.upper[i]);
                          return p;
                        },
                        [&](const BallUnion& u) {
                          double best = std::numeric_limits<double>::infinity();
                          for (const auto& b : u.balls) {
                            best = std::min(best, std::max(riesz::distance(x, b.center) - b.radius, 0.0));
                          }
                          if (best == 0.0) return Point(x.begin(), x.end());
                          std::optional<Point> chosen;
                          for (const auto& b : u.balls) {
                            if (std::max(riesz::distance(x, b.center) - b.radius, 0.0) != best) continue;
                            Point p = radial_projection(b.center, b.radius, x);
                            if (!chosen || p < *chosen) chosen = std::move(p);
                          }
                          return *chosen;
                        },
                    },
                    shape_);
}

Point CompactSetModel::deep_point() const {
  if (const auto* u = std::get_if<BallUnion>(&shape_)) {
    const auto it = std::max_element(u->balls.begin(), u->balls.end(),
                                     [](const Ball& a, const Ball& b) { return a.radius < b.radius; });
    return it->center;
  }
  return enclosing_center_;
}

double distance_to_set(const CompactSetModel& set, PointView x) { return set.distance(x); }

Point project_to_set(const CompactSetModel& set, PointView x) { return set.project(x); }

PointConfig sample_candidates(const CompactSetModel& set, std::size_t count, std::uint64_t seed) {
  if (count == 0) throw std::invalid_argument("sample_candidates needs count >= 1");
  const std::size_t dim = set.dim();
  Rng rng = make_rng(seed, "candidates");
  PointConfig out(dim);
  const std::size_t boundary = (count + 1) / 2;
  std::visit(Overloaded{
                 [&](const SphereSurface& s) {
                   for (const auto& dir : covering_directions(dim, count, rng)) {
                     out.push_back(sphere_point(s.center, s.radius, dir));
                   }
                 },
                 [&](const Ball& b) {
                   for (const auto& dir : covering_directions(dim, boundary, rng)) {
                     out.push_back(sphere_point(b.center, b.radius, dir));
                   }
                   for (std::size_t i = boundary; i < count; ++i) {
                     out.push_back(axpy(b.radius, random_in_unit_ball(rng, dim), b.center));
                   }
                 },
                 [&](const Box& b) {
                   for (std::size_t i = 0; i < boundary; ++i) out.push_back(uniform_on_box_surface(b, rng));
                   for (std::size_t i = boundary; i < count; ++i) {
                     Point x(dim);
                     for (std::size_t j = 0; j < dim; ++j) x[j] = b.lower[j] + uniform01(rng) * (b.upper[j] - b.lower[j]);
                     out.push_back(x);
                   }
                 },
                 [&](const BallUnion& u) {
                   for (std::size_t i = 0; i < boundary; ++i) out.push_back(outer_boundary_point_of_union(u, dim, rng));
                   for (std::size_t i = boundary; i < count; ++i) out.push_back(uniform_in_union(u, dim, rng));
                 },
             },
             set.shape());
  return out;
}

PointConfig sample_uniform(const CompactSetModel& set, std::size_t count, std::uint64_t seed) {
  const std::size_t dim = set.dim();
  Rng rng = make_rng(seed, "uniform");
  PointConfig out(dim);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(std::visit(
        Overloaded{
            [&](const SphereSurface& s) { return sphere_point(s.center, s.radius, random_unit_vector(rng, dim)); },
            [&](const Ball& b) { return axpy(b.radius, random_in_unit_ball(rng, dim), b.center); },
            [&](const Box& b) {
              Point x(dim);
              for (std::size_t j = 0; j < dim; ++j) x[j] = b.lower[j] + uniform01(rng) * (b.upper[j] - b.lower[j]);
              return x;
            },
            [&](const BallUnion& u) { return uniform_in_union(u, dim, rng); },
        },
        set.shape()));
  }
  return out;
}

EquilibriumOracle::EquilibriumOracle(double robin_constant, Field potential, Field green, Sampler sampler,
                                     bool approximate, std::optional<SphereMeasure> sphere)
    : robin_constant_(robin_constant),
      potential_(std::move(potential)),
      green_(std::move(green)),
      sampler_(std::move(sampler)),
      approximate_(approximate),
      sphere_(std::move(sphere)) {}

}  // namespace riesz
