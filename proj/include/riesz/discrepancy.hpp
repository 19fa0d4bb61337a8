#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include <json.hpp>

#include "riesz/kernel.hpp"
#include "riesz/point_config.hpp"
#include "riesz/sets.hpp"

namespace riesz {

/// Surface area of the unit sphere S^{d-1}: 2 pi^{d/2} / Gamma(d/2).
double unit_sphere_area(int dim);

/// Continuous compactly supported test function with optional closed forms.
struct TestFunction {
  std::function<double(PointView)> evaluator;
  Point support_center;
  double support_radius = 0.0;
  /// r -> upper bound on the modulus of continuity.
  std::optional<std::function<double(double)>> modulus_model;
  /// Known value or upper bound for the Dirichlet integral.
  std::optional<double> dirichlet;
  /// Exact mean against the uniform measure on a sphere (center, radius).
  std::optional<std::function<double(const SphereMeasure&)>> sphere_mean;

  double operator()(PointView x) const { return evaluator(x); }
};

/// phi(x) = max((|y - x| + d_E(x))^(2-d) - R^(2-d), 0), R = diam(E) + d_E(y) + 1.
/// On E it equals |y - x|^(2-d) - R^(2-d). Throws std::invalid_argument for
/// y in E or a non-Newtonian kernel.
TestFunction phi_for_potential(const CompactSetModel& set, PointView y, const KernelSpec& spec);

/// max(1 - |x - center| / radius, 0).
TestFunction radial_hat(PointView center, double radius);

TestFunction zero_function(std::size_t dim);

struct ModulusEstimate {
  double value = 0.0;
  /// True when the value comes from random probing rather than a model.
  bool estimated = false;
};

ModulusEstimate modulus_of_continuity(const TestFunction& phi, double r, std::size_t probes,
                                      std::uint64_t seed);

struct DirichletEstimate {
  double value = 0.0;
  double std_error = 0.0;
  bool estimated = false;
};

/// D[phi] = integral of |grad phi|^2. Uses the closed form when present,
/// otherwise Monte Carlo over the support ball with central differences.
DirichletEstimate dirichlet_integral(const TestFunction& phi, std::size_t samples, std::uint64_t seed);

struct DiscrepancyReport {
  double lhs = 0.0;
  double lhs_std_error = 0.0;
  double omega_term = 0.0;
  double energy_gap = 0.0;
  double smoothing_term = 0.0;
  double green_term = 0.0;
  double m_term = 0.0;
  double I_value = 0.0;
  double rhs = 0.0;
  double r = 0.0;
  double dirichlet = 0.0;
  /// I_value < 0: the square root is undefined and rhs uses max(I, 0).
  bool vacuous = false;
  /// lhs <= rhs + 3 * lhs_std_error (meaningful only when not vacuous).
  bool bound_holds = true;
};

nlohmann::json to_json(const DiscrepancyReport& report);

struct BoundOptions {
  std::size_t mc_samples = 100000;
  std::size_t modulus_probes = 20000;
  std::size_t dirichlet_samples = 100000;
  std::size_t shell_points = 2000;
  std::uint64_t seed = 0;
};

/// Evaluates both sides of the smoothed-measure discrepancy inequality
/// |mean phi(x_k) - int phi dmu_E| <= omega(phi;r) + sqrt(D/((d-2) w_d)) sqrt(I).
DiscrepancyReport discrepancy_bound(const CompactSetModel& set, const EquilibriumOracle& oracle,
                                  const PointConfig& points, const TestFunction& phi, double r,
                                  const KernelSpec& spec, const BoundOptions& options = {});

/// Integral of phi against mu_E: exact when both sides admit it, otherwise
/// Monte Carlo with its standard error.
struct IntegralEstimate {
  double value = 0.0;
  double std_error = 0.0;
};
IntegralEstimate equilibrium_integral(const TestFunction& phi, const EquilibriumOracle& oracle,
                                      std::size_t samples, std::uint64_t seed);

/// max of g_E over {x : d_E(x) = shell_distance}: seeded shell points plus a
/// local ascent along the shell.
double max_green_on_shell(const CompactSetModel& set, const EquilibriumOracle& oracle,
                          double shell_distance, std::size_t points, std::uint64_t seed);

struct PotentialError {
  double measured = 0.0;
  double bound_shape = 0.0;
  double p = 0.0;
};

/// |U^{mu_E}(y) - U^{tau(X)}(y)| and d_E(y)^(1-d) n^(-p/s) + d_E(y)^(1-d/2) n^(-p/2)
/// with p = s / (d + s - 2). Requires Hoelder data, X in E and y outside E.
PotentialError potential_error(const CompactSetModel& set, const EquilibriumOracle& oracle,
                               const PointConfig& points, PointView y, const KernelSpec& spec);

/// Max of U^{mu_E}(y) - U^{tau(X)}(y) over a seeded grid on E and on shells
/// around it. Grid points coinciding with X are skipped.
double sup_potential_deficit(const EquilibriumOracle& oracle, const PointConfig& points,
                             const CompactSetModel& set, const KernelSpec& spec, std::size_t grid,
                             std::uint64_t seed);

}  // namespace riesz
