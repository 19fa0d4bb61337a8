#include "riesz/measures.hpp"

#include <cmath>
#include <stdexcept>

#include "riesz/errors.hpp"

namespace riesz {

namespace {

void require_pairs(const PointConfig& points, const KernelSpec& spec) {
  if (points.size() < 2) throw std::invalid_argument("discrete energy needs at least two points");
  if (points.dim() != static_cast<std::size_t>(spec.dim())) {
    throw std::invalid_argument("configuration and kernel dimensions differ");
  }
}

double pair_normalization(std::size_t n) {
  const double nd = static_cast<double>(n);
  return 2.0 / (nd * (nd - 1.0));
}

}  // namespace

double discrete_energy(const PointConfig& points, const KernelSpec& spec, WorkerCount workers) {
  require_pairs(points, spec);
  const std::size_t n = points.size();
  std::vector<double> row_sums(n, 0.0);
  std::vector<char> coincident(n, 0);
  parallel_for(n, workers, [&](std::size_t j) {
    const PointView xj = points[j];
    double s = 0.0;
    for (std::size_t k = j + 1; k < n; ++k) {
      const double r2 = squared_distance(xj, points[k]);
      if (r2 == 0.0) {
        coincident[j] = 1;
        continue;
      }
      s += spec.value_from_squared(r2);
    }
    row_sums[j] = s;
  });
  for (std::size_t j = 0; j < n; ++j) {
    if (coincident[j]) throw CoincidentPointsError("configuration contains coincident points (index " + std::to_string(j) + ")");
  }
  return pair_normalization(n) * tree_sum(row_sums);
}

std::vector<double> discrete_energy_gradient(const PointConfig& points, const KernelSpec& spec,
                                             WorkerCount workers) {
  require_pairs(points, spec);
  const std::size_t n = points.size();
  const std::size_t d = points.dim();
  const double c = pair_normalization(n);
  std::vector<double> grad(n * d, 0.0);
  std::vector<char> coincident(n, 0);
  parallel_for(n, workers, [&](std::size_t j) {
    const PointView xj = points[j];
    double* g = grad.data() + j * d;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      const PointView xk = points[k];
      const double r2 = squared_distance(xj, xk);
      if (r2 == 0.0) {
        coincident[j] = 1;
        continue;
      }
      const double f = spec.gradient_factor_from_squared(r2);
      for (std::size_t i = 0; i < d; ++i) g[i] += f * (xj[i] - xk[i]);
    }
    for (std::size_t i = 0; i < d; ++i) g[i] *= c;
  });
  for (std::size_t j = 0; j < n; ++j) {
    if (coincident[j]) throw CoincidentPointsError("configuration contains coincident points (index " + std::to_string(j) + ")");
  }
  return grad;
}

double discrete_potential(const PointConfig& points, const KernelSpec& spec, PointView y) {
  if (points.empty()) throw std::invalid_argument("potential of an empty configuration");
  if (y.size() != points.dim()) throw std::invalid_argument("evaluation point dimension mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const double r2 = squared_distance(y, points[k]);
    if (r2 == 0.0) throw SingularityError("potential evaluated at a configuration point");
    s += spec.value_from_squared(r2);
  }
  return s / static_cast<double>(points.size());
}

double closeness_m_E(const PointConfig& points, const CompactSetModel& set, const EquilibriumOracle& oracle) {
  if (points.empty()) throw std::invalid_argument("m_E of an empty configuration");
  double s = 0.0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (set.distance(points[k]) <= kMembershipTolerance) continue;
    s += oracle.green(points[k]);
  }
  return s / static_cast<double>(points.size());
}

SmoothedConfig::SmoothedConfig(PointConfig base, double radius) : base_(std::move(base)), radius_(radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw std::invalid_argument("smoothing radius must be positive");
  if (base_.empty()) throw std::invalid_argument("smoothed configuration needs at least one point");
}

double smoothed_potential(const SmoothedConfig& smoothed, const KernelSpec& spec, PointView y) {
  if (!spec.is_newtonian()) throw std::invalid_argument("smoothed potentials are defined for the Newtonian kernel");
  const auto& points = smoothed.base();
  const double r2_min = smoothed.radius() * smoothed.radius();
  double s = 0.0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    s += spec.value_from_squared(std::max(r2_min, squared_distance(y, points[k])));
  }
  return s / static_cast<double>(points.size());
}

double smoothed_energy_terms(const SmoothedConfig& smoothed, const KernelSpec& spec) {
  if (!spec.is_newtonian()) throw std::invalid_argument("smoothed energies are defined for the Newtonian kernel");
  const auto& points = smoothed.base();
  const double n = static_cast<double>(points.size());
  const double energy = discrete_energy(points, spec);
  return (n - 1.0) / n * energy + std::pow(smoothed.radius(), 2.0 - spec.dim()) / n;
}

std::vector<double> monomial_means(const PointConfig& points, int degree) {
  if (degree < 1 || degree > 2) throw std::invalid_argument("moment degree must be 1 or 2");
  if (points.empty()) throw std::invalid_argument("moments of an empty configuration");
  const std::size_t d = points.dim();
  const std::size_t n = points.size();
  std::vector<std::pair<std::size_t, std::size_t>> monomials;  // (i, j), j == d means degree 1
  for (std::size_t i = 0; i < d; ++i) monomials.emplace_back(i, d);
  if (degree == 2) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i; j < d; ++j) monomials.emplace_back(i, j);
    }
  }
  std::vector<double> means;
  std::vector<double> values(n);
  for (const auto& [i, j] : monomials) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto x = points[k];
      values[k] = j == d ? x[i] : x[i] * x[j];
    }
    means.push_back(tree_sum(values) / static_cast<double>(n));
  }
  return means;
}

double moment_distance(const PointConfig& points, const EquilibriumOracle& oracle, int degree,
                       std::size_t samples, std::uint64_t seed) {
  const auto reference = monomial_means(oracle.sample(samples, seed), degree);
  const auto measured = monomial_means(points, degree);
  double worst = 0.0;
  for (std::size_t m = 0; m < measured.size(); ++m) worst = std::max(worst, std::abs(measured[m] - reference[m]));
  return worst;
}

}  // namespace riesz
