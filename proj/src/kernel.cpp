#include "riesz/kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "riesz/errors.hpp"

namespace riesz {

KernelSpec::KernelSpec(double alpha, int dim)
    : alpha_(alpha), dim_(dim), half_exponent_(0.5 * (alpha - dim)), coulomb3_(alpha == 2.0 && dim == 3) {
  if (dim < 3) {
    throw std::invalid_argument("kernel dimension must be at least 3 (the logarithmic case is not supported)");
  }
  if (!(alpha > 0.0 && alpha < dim)) {
    throw std::invalid_argument("kernel exponent must satisfy 0 < alpha < dim, got alpha=" + std::to_string(alpha));
  }
}

namespace {

double checked_squared_norm(const KernelSpec& spec, PointView x) {
  if (x.size() != static_cast<std::size_t>(spec.dim())) {
    throw std::invalid_argument("displacement dimension does not match kernel dimension");
  }
  const double r2 = squared_norm(x);
  if (r2 == 0.0) throw SingularityError("Riesz kernel evaluated at zero displacement");
  return r2;
}

}  // namespace

double kernel_value(const KernelSpec& spec, PointView displacement) {
  return spec.value_from_squared(checked_squared_norm(spec, displacement));
}

Point kernel_gradient(const KernelSpec& spec, PointView displacement) {
  const double f = spec.gradient_factor_from_squared(checked_squared_norm(spec, displacement));
  Point g(displacement.begin(), displacement.end());
  for (auto& c : g) c *= f;
  return g;
}

bool newtonian_flag(const KernelSpec& spec) { return spec.is_newtonian(); }

}  // namespace riesz
