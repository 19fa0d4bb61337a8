#include "riesz/configurations.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "riesz/errors.hpp"
#include "riesz/measures.hpp"
#include "riesz/rng.hpp"

namespace riesz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double energy_or_inf(const PointConfig& points, const KernelSpec& spec, WorkerCount workers) {
  try {
    return discrete_energy(points, spec, workers);
  } catch (const CoincidentPointsError&) {
    return kInf;
  }
}

void jitter_coincident(PointConfig& points, const CompactSetModel& set, Rng& rng) {
  const double jitter = 1e-6 * set.enclosing_radius();
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t j = 1; j < points.size(); ++j) {
      for (std::size_t k = 0; k < j; ++k) {
        if (squared_distance(points[j], points[k]) != 0.0) continue;
        const Point shifted = axpy(jitter, random_unit_vector(rng, points.dim()), points[j]);
        points.set(j, set.project(shifted));
        moved = true;
      }
    }
  }
}

PointConfig projected_step(const PointConfig& x, const std::vector<double>& grad, double t,
                           const CompactSetModel& set) {
  const std::size_t d = x.dim();
  std::vector<double> coords;
  coords.reserve(x.coords().size());
  Point trial(d);
  for (std::size_t j = 0; j < x.size(); ++j) {
    const auto xj = x[j];
    for (std::size_t i = 0; i < d; ++i) trial[i] = xj[i] - t * grad[j * d + i];
    const Point p = set.project(trial);
    coords.insert(coords.end(), p.begin(), p.end());
  }
  return PointConfig(d, std::move(coords));
}

double max_row_norm(const std::vector<double>& v, std::size_t d) {
  double m = 0.0;
  for (std::size_t j = 0; j * d < v.size(); ++j) {
    m = std::max(m, norm(std::span<const double>(v.data() + j * d, d)));
  }
  return m;
}

struct DescentOutcome {
  PointConfig points;
  double energy;
  std::size_t iterations;
  bool converged;
};

// Spectral projected gradient: Barzilai-Borwein trial step, halved until the
// energy decreases, projection onto E after every step.
DescentOutcome descend(PointConfig x, double energy, const CompactSetModel& set, const KernelSpec& spec,
                       const FeketeSearchParams& params, double step0) {
  const double radius = set.enclosing_radius();
  const std::size_t d = x.dim();
  std::vector<double> grad = discrete_energy_gradient(x, spec, params.workers);
  double gmax = max_row_norm(grad, d);
  if (gmax == 0.0) return {std::move(x), energy, 0, true};
  double t = step0 / gmax;
  std::size_t stalls = 0;
  for (std::size_t it = 1; it <= params.max_iters; ++it) {
    PointConfig y = projected_step(x, grad, t, set);
    double ey = energy_or_inf(y, spec, params.workers);
    while (!(ey < energy)) {
      t *= 0.5;
      if (t * gmax < 1e-15 * radius) return {std::move(x), energy, it, true};
      y = projected_step(x, grad, t, set);
      ey = energy_or_inf(y, spec, params.workers);
    }
    const double rel = (energy - ey) / std::abs(energy);
    std::vector<double> gy = discrete_energy_gradient(y, spec, params.workers);
    double ss = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < gy.size(); ++i) {
      const double s = y.coords()[i] - x.coords()[i];
      ss += s * s;
      sy += s * (gy[i] - grad[i]);
    }
    x = std::move(y);
    energy = ey;
    grad = std::move(gy);
    gmax = max_row_norm(grad, d);
    if (gmax == 0.0) return {std::move(x), energy, it, true};
    stalls = rel < params.tol ? stalls + 1 : 0;
    if (stalls >= 3) return {std::move(x), energy, it, true};
    t = sy > 0.0 ? ss / sy : 2.0 * t;
    t = std::min(t, radius / gmax);
  }
  return {std::move(x), energy, params.max_iters, false};
}

}  // namespace

FeketeResult fekete_search(const CompactSetModel& set, const KernelSpec& spec, const FeketeSearchParams& params) {
  if (params.n < 2) throw std::invalid_argument("fekete_search needs n >= 2");
  if (params.restarts < 1) throw std::invalid_argument("fekete_search needs restarts >= 1");
  if (!(params.tol > 0.0)) throw std::invalid_argument("fekete_search needs tol > 0");
  if (params.step0 && !(*params.step0 > 0.0)) throw std::invalid_argument("fekete_search needs step0 > 0");
  if (static_cast<std::size_t>(spec.dim()) != set.dim()) throw std::invalid_argument("kernel and set dimensions differ");

  const double step0 =
      params.step0.value_or(0.1 * set.enclosing_radius() / std::sqrt(static_cast<double>(params.n)));
  FeketeResult best;
  bool have_best = false;
  for (std::size_t r = 0; r < params.restarts; ++r) {
    PointConfig start = sample_uniform(set, params.n, substream_seed(params.seed, "init", r));
    Rng jitter_rng = make_rng(params.seed, "jitter", r);
    jitter_coincident(start, set, jitter_rng);
    const double e0 = discrete_energy(start, spec, params.workers);
    best.initial_energies.push_back(e0);
    DescentOutcome out = descend(std::move(start), e0, set, spec, params, step0);
    if (!have_best || out.energy < best.energy) {
      best.points = std::move(out.points);
      best.energy = out.energy;
      best.iterations = out.iterations;
      best.converged = out.converged;
      best.best_restart = r;
      have_best = true;
    }
  }
  return best;
}

double leja_objective(const PointConfig& prefix, const KernelSpec& spec, PointView x) {
  double s = 0.0;
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    const double r2 = squared_distance(x, prefix[k]);
    if (r2 == 0.0) throw CoincidentPointsError("Leja candidate coincides with a chosen point");
    s += spec.value_from_squared(r2);
  }
  return s;
}

namespace {

double objective_or_inf(const PointConfig& prefix, const KernelSpec& spec, PointView x) {
  try {
    return leja_objective(prefix, spec, x);
  } catch (const CoincidentPointsError&) {
    return kInf;
  }
}

Point objective_gradient(const PointConfig& prefix, const KernelSpec& spec, PointView x) {
  Point g(x.size(), 0.0);
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    const auto xk = prefix[k];
    const double f = spec.gradient_factor_from_squared(squared_distance(x, xk));
    for (std::size_t i = 0; i < g.size(); ++i) g[i] += f * (x[i] - xk[i]);
  }
  return g;
}

// Projected descent on the single new point; only strict decreases are kept,
// so the result never scores worse than the starting candidate.
Point refine_leja_point(const PointConfig& prefix, const CompactSetModel& set, const KernelSpec& spec, Point x,
                        double value, double step) {
  const double radius = set.enclosing_radius();
  Point g = objective_gradient(prefix, spec, x);
  for (int it = 0; it < 400; ++it) {
    const double gn = norm(g);
    if (gn == 0.0) break;
    const Point y = set.project(axpy(-step / gn, g, x));
    const double fy = objective_or_inf(prefix, spec, y);
    if (fy < value) {
      x = y;
      value = fy;
      g = objective_gradient(prefix, spec, x);
      step = std::min(2.0 * step, 2.0 * radius);
    } else {
      step *= 0.5;
      if (step < 1e-14 * radius) break;
    }
  }
  return x;
}

}  // namespace

Point leja_next(const LejaState& state, const CompactSetModel& set, const KernelSpec& spec) {
  if (!spec.is_newtonian()) throw std::invalid_argument("Leja points use the Newtonian kernel");
  if (state.prefix.empty()) throw std::invalid_argument("Leja prefix must be nonempty");
  if (state.candidates.empty()) throw std::invalid_argument("Leja candidate list is empty");
  std::size_t best = 0;
  double best_value = kInf;
  for (std::size_t i = 0; i < state.candidates.size(); ++i) {
    const double v = leja_objective(state.prefix, spec, state.candidates[i]);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  const double spacing = set.enclosing_radius() / std::sqrt(static_cast<double>(state.candidates.size()));
  return refine_leja_point(state.prefix, set, spec, state.candidates.point(best), best_value, spacing);
}

PointConfig leja_sequence(const CompactSetModel& set, const KernelSpec& spec, std::size_t n, PointView xi0,
                          std::size_t candidate_count, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("leja_sequence needs n >= 1");
  if (candidate_count < 1) throw std::invalid_argument("leja_sequence needs at least one candidate");
  if (xi0.size() != set.dim()) throw std::invalid_argument("xi0 dimension does not match the set");
  if (set.distance(xi0) > kMembershipTolerance) throw InfeasibleInputError("xi0 is not a point of E");
  LejaState state{PointConfig(set.dim()), PointConfig(set.dim())};
  state.prefix.push_back(xi0);
  for (std::size_t m = 1; m < n; ++m) {
    state.candidates = sample_candidates(set, candidate_count, substream_seed(seed, "leja", m));
    state.prefix.push_back(leja_next(state, set, spec));
  }
  return state.prefix;
}

PointConfig random_config(const CompactSetModel& set, std::size_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_config needs n >= 1");
  return sample_uniform(set, n, substream_seed(seed, "random"));
}

}  // namespace riesz
