#include <algorithm>
#include <cmath>

#include "riesz/configurations.hpp"
#include "riesz/errors.hpp"
#include "riesz/measures.hpp"
#include "riesz/rng.hpp"
#include "riesz/sets.hpp"

namespace riesz {

namespace {

EquilibriumOracle sphere_oracle(const Point& center, double radius, std::size_t dim) {
  const double e = 2.0 - static_cast<double>(dim);
  const double robin = std::pow(radius, e);
  auto potential = [center, radius, e](PointView x) {
    return std::pow(std::max(distance(x, center), radius), e);
  };
  auto green = [center, radius, e, robin](PointView x) {
    const double r = distance(x, center);
    if (r <= radius) return 0.0;
    return robin - std::pow(r, e);
  };
  const CompactSetModel surface(SphereSurface{center, radius});
  auto sampler = [surface](std::size_t count, std::uint64_t seed) { return sample_uniform(surface, count, seed); };
  return EquilibriumOracle(robin, potential, green, sampler, false, SphereMeasure{center, radius});
}

// mu_E replaced by the counting measure of an approximate Fekete set; W(E)
// read off at a deep interior point, where U^{mu_E} = W(E) for regular E.
EquilibriumOracle discretized_oracle(const CompactSetModel& set, const KernelSpec& spec,
                                     const OracleOptions& options) {
  FeketeSearchParams params;
  params.n = options.discretization_points;
  params.restarts = 1;
  params.max_iters = 3000;
  params.seed = substream_seed(options.seed, "oracle");
  const auto fekete = fekete_search(set, spec, params);
  const PointConfig nodes = fekete.points;
  const double robin = discrete_potential(nodes, spec, set.deep_point());

  auto potential = [nodes, spec, robin](PointView x) {
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (squared_distance(x, nodes[k]) == 0.0) return robin;
    }
    return std::min(discrete_potential(nodes, spec, x), robin);
  };
  auto green = [set, potential, robin](PointView x) {
    if (set.contains(x, kMembershipTolerance)) return 0.0;
    return std::max(robin - potential(x), 0.0);
  };
  auto sampler = [nodes](std::size_t count, std::uint64_t seed) {
    Rng rng = make_rng(seed, "oracle-sampler");
    std::uniform_int_distribution<std::size_t> pick(0, nodes.size() - 1);
    PointConfig out(nodes.dim());
    for (std::size_t i = 0; i < count; ++i) out.push_back(nodes[pick(rng)]);
    return out;
  };
  return EquilibriumOracle(robin, potential, green, sampler, true);
}

}  // namespace

EquilibriumOracle equilibrium_oracle(const CompactSetModel& set, const KernelSpec& spec,
                                     const OracleOptions& options) {
  if (!spec.is_newtonian()) {
    throw UnsupportedOracleError("equilibrium oracles are available for the Newtonian kernel (alpha = 2) only");
  }
  if (static_cast<std::size_t>(spec.dim()) != set.dim()) {
    throw std::invalid_argument("kernel and set dimensions differ");
  }
  if (const auto* b = std::get_if<Ball>(&set.shape())) return sphere_oracle(b->center, b->radius, set.dim());
  if (const auto* s = std::get_if<SphereSurface>(&set.shape())) return sphere_oracle(s->center, s->radius, set.dim());
  return discretized_oracle(set, spec, options);
}

}  // namespace riesz
