#pragma once

#include <concepts>

#include "riesz/geometry.hpp"

namespace riesz {

/// Radial kernel evaluated through the squared distance. Energy and potential
/// code only needs these two members, so other radial kernels of the form
/// K(r) = H(r^{2-d}) can be slotted in behind the same surface.
template <typename K>
concept RadialKernel = requires(const K& k, double r2) {
  { k.value_from_squared(r2) } -> std::convertible_to<double>;
  { k.gradient_factor_from_squared(r2) } -> std::convertible_to<double>;
};

/// Riesz kernel k_alpha(x) = |x|^(alpha - dim), 0 < alpha < dim, dim >= 3.
class KernelSpec {
 public:
  KernelSpec(double alpha, int dim);

  static KernelSpec newtonian(int dim) { return KernelSpec(2.0, dim); }

  double alpha() const { return alpha_; }
  int dim() const { return dim_; }
  double exponent() const { return alpha_ - dim_; }
  bool is_newtonian() const { return alpha_ == 2.0; }

  /// |x|^(alpha-dim) given |x|^2 > 0. No singularity check.
  double value_from_squared(double r2) const {
    if (coulomb3_) return 1.0 / std::sqrt(r2);
    return std::pow(r2, half_exponent_);
  }

  /// Scalar f with grad k(x) = f * x, given |x|^2 > 0.
  double gradient_factor_from_squared(double r2) const {
    if (coulomb3_) return -1.0 / (r2 * std::sqrt(r2));
    return exponent() * std::pow(r2, half_exponent_ - 1.0);
  }

  bool operator==(const KernelSpec&) const = default;

 private:
  double alpha_;
  int dim_;
  double half_exponent_;
  bool coulomb3_;
};

static_assert(RadialKernel<KernelSpec>);

/// k_alpha(displacement). Throws SingularityError for a zero displacement.
double kernel_value(const KernelSpec& spec, PointView displacement);

/// Gradient of kernel_value with respect to the displacement,
/// (alpha - d) |x|^(alpha - d - 2) x. Throws SingularityError at zero.
Point kernel_gradient(const KernelSpec& spec, PointView displacement);

bool newtonian_flag(const KernelSpec& spec);

}  // namespace riesz
