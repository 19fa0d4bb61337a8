#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "riesz/kernel.hpp"
#include "riesz/parallel.hpp"
#include "riesz/point_config.hpp"
#include "riesz/sets.hpp"

namespace riesz {

/// A point counts as "in E" when its distance to E is at most this.
inline constexpr double kMembershipTolerance = 1e-9;

/// Normalized pair energy 2/(n(n-1)) * sum_{j<k} k(x_j - x_k).
/// Throws CoincidentPointsError if two points coincide. The reduction shape is
/// fixed, so the result is bitwise independent of `workers`.
double discrete_energy(const PointConfig& points, const KernelSpec& spec, WorkerCount workers = {});

/// Gradient of discrete_energy with respect to every coordinate, row-major.
/// Point j's entry is summed over k in index order.
std::vector<double> discrete_energy_gradient(const PointConfig& points, const KernelSpec& spec,
                                             WorkerCount workers = {});

/// U^{tau(X)}(y) = (1/n) sum_k k(y - x_k). Throws SingularityError if y is a
/// configuration point.
double discrete_potential(const PointConfig& points, const KernelSpec& spec, PointView y);

/// m_E(X): average of g_E over the points outside E; exactly 0 when X lies in E.
double closeness_m_E(const PointConfig& points, const CompactSetModel& set,
                     const EquilibriumOracle& oracle);

/// tau(X) smeared over spheres of radius r about each point.
class SmoothedConfig {
 public:
  SmoothedConfig(PointConfig base, double radius);

  const PointConfig& base() const { return base_; }
  double radius() const { return radius_; }

 private:
  PointConfig base_;
  double radius_;
};

/// (1/n) sum_k max(r, |y - x_k|)^(2-d). Newtonian only; finite everywhere.
double smoothed_potential(const SmoothedConfig& smoothed, const KernelSpec& spec, PointView y);

/// (n-1)/n * I_hat[tau(X)] + r^(2-d)/n, the upper bound for the energy of the
/// smoothed measure.
double smoothed_energy_terms(const SmoothedConfig& smoothed, const KernelSpec& spec);

/// Max over coordinate monomials of total degree 1..degree of the difference
/// between the mean under tau(X) and a Monte Carlo mean under mu_E.
double moment_distance(const PointConfig& points, const EquilibriumOracle& oracle, int degree,
                       std::size_t samples, std::uint64_t seed);

/// Per-monomial means of a configuration, in a fixed monomial order.
std::vector<double> monomial_means(const PointConfig& points, int degree);

/// CSV with header x1,...,xd and one point per row, round-trip precision.
void write_points_csv(std::ostream& out, const PointConfig& points);
PointConfig read_points_csv(std::istream& in);

}  // namespace riesz
