#include "riesz/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "riesz/measures.hpp"
#include "riesz/rng.hpp"

namespace riesz {

namespace {

void require_newtonian(const KernelSpec& spec) {
  if (!spec.is_newtonian()) throw std::invalid_argument("discrepancy bounds hold for the Newtonian kernel (alpha = 2) only");
}

// Moves x onto {d_E = shell_distance} along the ray from its projection.
std::optional<Point> onto_shell(const CompactSetModel& set, PointView x, double shell_distance) {
  const Point p = set.project(x);
  Point v = subtract(x, p);
  const double len = norm(v);
  if (len == 0.0) return std::nullopt;
  return axpy(shell_distance / len, v, p);
}

PointConfig outward_shell(const CompactSetModel& set, double shell_distance, std::size_t count, Rng& rng) {
  const double reach = set.enclosing_radius() + shell_distance;
  PointConfig out(set.dim());
  for (std::size_t i = 0; i < count; ++i) {
    const Point far = axpy(reach, random_unit_vector(rng, set.dim()), set.enclosing_center());
    if (auto s = onto_shell(set, far, shell_distance)) out.push_back(*s);
  }
  return out;
}

}  // namespace

double unit_sphere_area(int dim) {
  const double half = 0.5 * static_cast<double>(dim);
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

TestFunction phi_for_potential(const CompactSetModel& set, PointView y, const KernelSpec& spec) {
  require_newtonian(spec);
  if (y.size() != set.dim()) throw std::invalid_argument("exterior point dimension mismatch");
  const double dy = set.distance(y);
  if (!(dy > 0.0)) throw std::invalid_argument("phi_for_potential needs a point y outside E");
  const int d = spec.dim();
  const double e = 2.0 - d;
  const double support = set.diameter() + dy + 1.0;
  const double cutoff = std::pow(support, e);

  TestFunction phi;
  const Point center(y.begin(), y.end());
  phi.support_center = center;
  phi.support_radius = support;
  phi.evaluator = [set, center, e, support, cutoff](PointView x) {
    const double f = distance(center, x) + set.distance(x);
    if (f >= support) return 0.0;
    return std::max(std::pow(f, e) - cutoff, 0.0);
  };
  const double lipschitz = 2.0 * (d - 2) * std::sqrt(static_cast<double>(d)) * std::pow(dy, 1.0 - d);
  phi.modulus_model = [lipschitz](double r) { return lipschitz * r; };
  // |grad phi|^2 <= 4d(d-2)^2 f^(2-2d) split over B(y, d_E(y)) and the annulus up to R.
  const double wd = unit_sphere_area(d);
  phi.dirichlet = 4.0 * (d - 2) * wd * ((d - 2) * std::pow(dy, e) + d * (std::pow(dy, e) - cutoff));
  phi.sphere_mean = [set, center, e, cutoff](const SphereMeasure& sphere) {
    for (std::size_t axis = 0; axis < sphere.center.size(); ++axis) {
      for (double sign : {-1.0, 1.0}) {
        const Point probe = axpy(sign * sphere.radius, unit_vector(sphere.center.size(), axis), sphere.center);
        if (set.distance(probe) > kMembershipTolerance) {
          throw std::logic_error("closed-form mean needs a sphere contained in E");
        }
      }
    }
    return std::pow(std::max(distance(center, sphere.center), sphere.radius), e) - cutoff;
  };
  return phi;
}

TestFunction radial_hat(PointView center, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("hat radius must be positive");
  TestFunction phi;
  const Point c(center.begin(), center.end());
  const int d = static_cast<int>(c.size());
  phi.support_center = c;
  phi.support_radius = radius;
  phi.evaluator = [c, radius](PointView x) { return std::max(1.0 - distance(c, x) / radius, 0.0); };
  phi.modulus_model = [radius](double r) { return std::min(r / radius, 1.0); };
  phi.dirichlet = unit_sphere_area(d) * std::pow(radius, d - 2) / d;
  if (d == 3) {
    // |x - c| for x uniform on a sphere has density t / (2 R a) on [|R - a|, R + a].
    phi.sphere_mean = [c, radius](const SphereMeasure& sphere) {
      const double a = distance(c, sphere.center);
      const double big_r = sphere.radius;
      if (a == 0.0) return std::max(1.0 - big_r / radius, 0.0);
      const double lo = std::abs(big_r - a);
      const double hi = std::min(big_r + a, radius);
      if (hi <= lo) return 0.0;
      auto antiderivative = [radius](double t) { return t * t / 2.0 - t * t * t / (3.0 * radius); };
      return (antiderivative(hi) - antiderivative(lo)) / (2.0 * big_r * a);
    };
  }
  return phi;
}

TestFunction zero_function(std::size_t dim) {
  TestFunction phi;
  phi.support_center = Point(dim, 0.0);
  phi.support_radius = 0.0;
  phi.evaluator = [](PointView) { return 0.0; };
  phi.modulus_model = [](double) { return 0.0; };
  phi.dirichlet = 0.0;
  phi.sphere_mean = [](const SphereMeasure&) { return 0.0; };
  return phi;
}

ModulusEstimate modulus_of_continuity(const TestFunction& phi, double r, std::size_t probes, std::uint64_t seed) {
  if (!(r > 0.0)) throw std::invalid_argument("modulus of continuity needs r > 0");
  if (phi.modulus_model) return {(*phi.modulus_model)(r), false};
  Rng rng = make_rng(seed, "modulus");
  const std::size_t dim = phi.support_center.size();
  const double reach = phi.support_radius + r;
  double worst = 0.0;
  for (std::size_t i = 0; i < probes; ++i) {
    const Point x = axpy(reach, random_in_unit_ball(rng, dim), phi.support_center);
    const double len = (i % 2 == 0) ? r : r * uniform01(rng);
    const Point y = axpy(len, random_unit_vector(rng, dim), x);
    worst = std::max(worst, std::abs(phi(x) - phi(y)));
  }
  return {1.2 * worst, true};
}

DirichletEstimate dirichlet_integral(const TestFunction& phi, std::size_t samples, std::uint64_t seed) {
  if (phi.dirichlet) return {*phi.dirichlet, 0.0, false};
  if (phi.support_radius == 0.0 || samples == 0) return {0.0, 0.0, true};
  const std::size_t dim = phi.support_center.size();
  const double h = 1e-5;
  Rng rng = make_rng(seed, "dirichlet");
  double sum = 0.0, sum_sq = 0.0;
  Point probe(dim);
  for (std::size_t s = 0; s < samples; ++s) {
    const Point x = axpy(phi.support_radius, random_in_unit_ball(rng, dim), phi.support_center);
    double g2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      probe = x;
      probe[i] += h;
      const double up = phi(probe);
      probe[i] -= 2.0 * h;
      const double down = phi(probe);
      const double di = (up - down) / (2.0 * h);
      g2 += di * di;
    }
    sum += g2;
    sum_sq += g2 * g2;
  }
  const double n = static_cast<double>(samples);
  const double volume = unit_sphere_area(static_cast<int>(dim)) * std::pow(phi.support_radius, static_cast<double>(dim)) /
                        static_cast<double>(dim);
  const double mean = sum / n;
  const double var = std::max(sum_sq / n - mean * mean, 0.0);
  return {volume * mean, volume * std::sqrt(var / n), true};
}

IntegralEstimate equilibrium_integral(const TestFunction& phi, const EquilibriumOracle& oracle, std::size_t samples,
                                      std::uint64_t seed) {
  if (oracle.sphere_measure() && phi.sphere_mean) return {(*phi.sphere_mean)(*oracle.sphere_measure()), 0.0};
  if (samples < 2) throw std::invalid_argument("Monte Carlo integral needs at least two samples");
  const PointConfig draws = oracle.sample(samples, substream_seed(seed, "quadrature"));
  std::vector<double> values(draws.size());
  for (std::size_t k = 0; k < draws.size(); ++k) values[k] = phi(draws[k]);
  const double n = static_cast<double>(values.size());
  const double mean = tree_sum(values) / n;
  for (auto& v : values) v = (v - mean) * (v - mean);
  const double var = tree_sum(values) / (n - 1.0);
  return {mean, std::sqrt(var / n)};
}

double max_green_on_shell(const CompactSetModel& set, const EquilibriumOracle& oracle, double shell_distance,
                          std::size_t points, std::uint64_t seed) {
  Rng rng = make_rng(seed, "shell");
  const PointConfig shell = outward_shell(set, shell_distance, points, rng);
  double best = 0.0;
  Point best_point;
  for (std::size_t i = 0; i < shell.size(); ++i) {
    const double g = oracle.green(shell[i]);
    if (best_point.empty() || g > best) {
      best = g;
      best_point = shell.point(i);
    }
  }
  if (best_point.empty()) return 0.0;
  double step = 0.5 * shell_distance;
  for (int it = 0, failures = 0; it < 200 && step > 1e-9 * shell_distance; ++it) {
    const Point trial = axpy(step, random_unit_vector(rng, set.dim()), best_point);
    const auto s = onto_shell(set, trial, shell_distance);
    const double g = s ? oracle.green(*s) : -1.0;
    if (s && g > best) {
      best = g;
      best_point = *s;
      failures = 0;
    } else if (++failures >= 8) {
      step *= 0.5;
      failures = 0;
    }
  }
  return best;
}

DiscrepancyReport discrepancy_bound(const CompactSetModel& set, const EquilibriumOracle& oracle,
                                  const PointConfig& points, const TestFunction& phi, double r,
                                  const KernelSpec& spec, const BoundOptions& options) {
  require_newtonian(spec);
  if (!(r > 0.0)) throw std::invalid_argument("smoothing radius must be positive");
  if (points.size() < 2) throw std::invalid_argument("discrepancy bound needs n >= 2");
  const int d = spec.dim();
  const double n = static_cast<double>(points.size());
  const double robin = oracle.robin_constant();

  DiscrepancyReport rep;
  rep.r = r;
  rep.m_term = 2.0 * closeness_m_E(points, set, oracle);
  rep.energy_gap = (n - 1.0) / n * discrete_energy(points, spec) - robin;
  rep.smoothing_term = std::pow(r, 2.0 - d) / n;
  rep.green_term =
      2.0 * max_green_on_shell(set, oracle, 2.0 * r, options.shell_points, substream_seed(options.seed, "green"));
  rep.I_value = rep.m_term + rep.energy_gap + rep.smoothing_term + rep.green_term;
  rep.omega_term = modulus_of_continuity(phi, r, options.modulus_probes, substream_seed(options.seed, "modulus")).value;
  rep.dirichlet = dirichlet_integral(phi, options.dirichlet_samples, substream_seed(options.seed, "dirichlet")).value;

  const auto integral = equilibrium_integral(phi, oracle, options.mc_samples, options.seed);
  std::vector<double> values(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) values[k] = phi(points[k]);
  rep.lhs = std::abs(tree_sum(values) / n - integral.value);
  rep.lhs_std_error = integral.std_error;

  rep.vacuous = rep.I_value < 0.0;
  rep.rhs = rep.omega_term +
            std::sqrt(rep.dirichlet / ((d - 2) * unit_sphere_area(d))) * std::sqrt(std::max(rep.I_value, 0.0));
  rep.bound_holds = rep.vacuous || rep.lhs <= rep.rhs + 3.0 * rep.lhs_std_error;
  return rep;
}

nlohmann::json to_json(const DiscrepancyReport& report) {
  return nlohmann::json{
      {"lhs", report.lhs},
      {"lhs_std_error", report.lhs_std_error},
      {"omega_term", report.omega_term},
      {"energy_gap", report.energy_gap},
      {"smoothing_term", report.smoothing_term},
      {"green_term", report.green_term},
      {"m_term", report.m_term},
      {"I_value", report.I_value},
      {"rhs", report.rhs},
      {"r", report.r},
      {"dirichlet", report.dirichlet},
      {"vacuous", report.vacuous},
      {"bound_holds", report.bound_holds},
  };
}

PotentialError potential_error(const CompactSetModel& set, const EquilibriumOracle& oracle, const PointConfig& points,
                               PointView y, const KernelSpec& spec) {
  require_newtonian(spec);
  if (!set.holder()) throw std::invalid_argument("potential_error needs Hoelder data (A, s) on the set");
  const double dy = set.distance(y);
  if (!(dy > kMembershipTolerance)) throw std::invalid_argument("potential_error needs y outside E");
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (set.distance(points[k]) > kMembershipTolerance) {
      throw std::invalid_argument("potential_error needs every configuration point in E");
    }
  }
  const double d = spec.dim();
  const double s = set.holder()->s;
  const double n = static_cast<double>(points.size());
  PotentialError out;
  out.p = s / (d + s - 2.0);
  out.measured = std::abs(oracle.potential(y) - discrete_potential(points, spec, y));
  out.bound_shape = std::pow(dy, 1.0 - d) * std::pow(n, -out.p / s) + std::pow(dy, 1.0 - d / 2.0) * std::pow(n, -out.p / 2.0);
  return out;
}

double sup_potential_deficit(const EquilibriumOracle& oracle, const PointConfig& points, const CompactSetModel& set,
                             const KernelSpec& spec, std::size_t grid, std::uint64_t seed) {
  require_newtonian(spec);
  if (grid == 0) throw std::invalid_argument("sup_potential_deficit needs a nonempty grid");
  Rng rng = make_rng(seed, "deficit-shells");
  std::vector<PointConfig> layers;
  layers.push_back(sample_candidates(set, grid, substream_seed(seed, "deficit-grid")));
  for (double fraction : {0.05, 0.2, 0.5}) {
    layers.push_back(outward_shell(set, fraction * set.enclosing_radius(), grid, rng));
  }
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& layer : layers) {
    for (std::size_t i = 0; i < layer.size(); ++i) {
      bool hit = false;
      for (std::size_t k = 0; k < points.size() && !hit; ++k) hit = squared_distance(layer[i], points[k]) == 0.0;
      if (hit) continue;
      worst = std::max(worst, oracle.potential(layer[i]) - discrete_potential(points, spec, layer[i]));
    }
  }
  return worst;
}

}  // namespace riesz
