#pragma once

#include <cstdint>
#include <optional>

#include "riesz/kernel.hpp"
#include "riesz/parallel.hpp"
#include "riesz/point_config.hpp"
#include "riesz/sets.hpp"

namespace riesz {

struct FeketeSearchParams {
  std::size_t n = 2;
  std::size_t restarts = 1;
  std::size_t max_iters = 5000;
  /// Initial step length. Defaults to 0.1 * enclosing radius / sqrt(n).
  std::optional<double> step0;
  /// Relative energy decrease below which an accepted step counts as stalled.
  double tol = 1e-13;
  std::uint64_t seed = 0;
  WorkerCount workers;
};

struct FeketeResult {
  PointConfig points;
  double energy = 0.0;
  std::size_t iterations = 0;
  /// False when max_iters ran out; points are still the best found.
  bool converged = false;
  std::size_t best_restart = 0;
  /// Energy of every restart's (projected, jittered) starting configuration.
  std::vector<double> initial_energies;
};

/// Approximate n-point Fekete configuration on E: projected gradient descent
/// with spectral step lengths and halving backtracking, best of `restarts`.
FeketeResult fekete_search(const CompactSetModel& set, const KernelSpec& spec,
                           const FeketeSearchParams& params);

struct LejaState {
  PointConfig prefix;
  PointConfig candidates;
};

/// sum_k |x - xi_k|^(2-d), the unnormalized Leja objective.
double leja_objective(const PointConfig& prefix, const KernelSpec& spec, PointView x);

/// Candidate minimizing the Leja objective (lowest index on ties), polished by
/// projected descent on E. Throws CoincidentPointsError if a candidate
/// coincides with a prefix point.
Point leja_next(const LejaState& state, const CompactSetModel& set, const KernelSpec& spec);

/// (xi_0, ..., xi_{n-1}) with a fresh seeded candidate set per step.
/// Throws InfeasibleInputError when xi0 is not in E.
PointConfig leja_sequence(const CompactSetModel& set, const KernelSpec& spec, std::size_t n,
                          PointView xi0, std::size_t candidate_count, std::uint64_t seed);

/// n independent uniform draws from E.
PointConfig random_config(const CompactSetModel& set, std::size_t n, std::uint64_t seed);

}  // namespace riesz
