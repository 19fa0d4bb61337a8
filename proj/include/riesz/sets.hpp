#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "riesz/geometry.hpp"
#include "riesz/kernel.hpp"
#include "riesz/point_config.hpp"

namespace riesz {

struct Ball {
  Point center;
  double radius;
};

struct SphereSurface {
  Point center;
  double radius;
};

/// Solid axis-aligned box [lower, upper].
struct Box {
  Point lower;
  Point upper;
};

struct BallUnion {
  std::vector<Ball> balls;
};

using Shape = std::variant<Ball, SphereSurface, Box, BallUnion>;

/// Hoelder data for g_E(x) <= A * d_E(x)^s on the unbounded complement.
struct HolderData {
  double A;
  double s;
};

/// Compact set E in R^d with exact geometric queries.
class CompactSetModel {
 public:
  /// Hoelder data defaults to (1, 1) for ball, sphere and box; a union of
  /// balls carries none unless declared.
  explicit CompactSetModel(Shape shape);
  CompactSetModel(Shape shape, std::optional<HolderData> holder);

  static CompactSetModel unit_sphere(std::size_t dim = 3);
  static CompactSetModel unit_ball(std::size_t dim = 3);

  std::size_t dim() const { return dim_; }
  const Shape& shape() const { return shape_; }
  const std::optional<HolderData>& holder() const { return holder_; }
  std::string_view shape_name() const;

  double distance(PointView x) const;
  Point project(PointView x) const;
  bool contains(PointView x, double tol = 1e-9) const { return distance(x) <= tol; }

  /// Center and radius of a ball enclosing E.
  const Point& enclosing_center() const { return enclosing_center_; }
  double enclosing_radius() const { return enclosing_radius_; }
  double diameter() const { return diameter_; }

  /// A point of E maximizing the distance to the boundary of E (the center
  /// of a solid ball or box); for a sphere surface, the center of the sphere.
  Point deep_point() const;

 private:
  Shape shape_;
  std::optional<HolderData> holder_;
  std::size_t dim_ = 0;
  Point enclosing_center_;
  double enclosing_radius_ = 0.0;
  double diameter_ = 0.0;
};

double distance_to_set(const CompactSetModel& set, PointView x);
Point project_to_set(const CompactSetModel& set, PointView x);

/// Seeded, asymptotically covering candidate points in E. Boundary-heavy for
/// solid shapes since Newtonian potentials attain their minimum over E on the
/// outer boundary.
PointConfig sample_candidates(const CompactSetModel& set, std::size_t count, std::uint64_t seed);

/// Independent uniform draws from E (volume measure for solids, surface
/// measure for the sphere).
PointConfig sample_uniform(const CompactSetModel& set, std::size_t count, std::uint64_t seed);

/// Uniform surface measure on a sphere, the equilibrium measure of both the
/// ball and the sphere surface in the Newtonian case.
struct SphereMeasure {
  Point center;
  double radius;
};

/// Equilibrium data of E: Robin constant W(E), the potential of mu_E, the
/// Green function g_E = W(E) - U^{mu_E} and a sampler for mu_E.
class EquilibriumOracle {
 public:
  using Field = std::function<double(PointView)>;
  using Sampler = std::function<PointConfig(std::size_t, std::uint64_t)>;

  EquilibriumOracle(double robin_constant, Field potential, Field green, Sampler sampler,
                    bool approximate, std::optional<SphereMeasure> sphere = std::nullopt);

  double robin_constant() const { return robin_constant_; }
  double potential(PointView x) const { return potential_(x); }
  double green(PointView x) const { return green_(x); }
  PointConfig sample(std::size_t count, std::uint64_t seed) const { return sampler_(count, seed); }

  /// True for the discretized oracle used on shapes without closed forms.
  bool approximate() const { return approximate_; }
  const std::optional<SphereMeasure>& sphere_measure() const { return sphere_; }

 private:
  double robin_constant_;
  Field potential_;
  Field green_;
  Sampler sampler_;
  bool approximate_;
  std::optional<SphereMeasure> sphere_;
};

struct OracleOptions {
  /// Size of the Fekete discretization backing non-analytic shapes.
  std::size_t discretization_points = 400;
  std::uint64_t seed = 0;
};

/// Closed-form oracle for balls and spheres; a Fekete-discretized
/// approximation for boxes and unions of balls. Newtonian kernels only.
/// Throws UnsupportedOracleError otherwise.
EquilibriumOracle equilibrium_oracle(const CompactSetModel& set, const KernelSpec& spec,
                                     const OracleOptions& options = {});

/// Parses the line-oriented `key = value` set definition. Throws ParseError.
CompactSetModel parse_set_definition(std::string_view text);
std::string format_set_definition(const CompactSetModel& set);

}  // namespace riesz
