#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace riesz {

/// Number of worker threads for pairwise sums. Zero selects the runtime
/// default. Results never depend on this value.
struct WorkerCount {
  unsigned value = 0;
};

/// Runs body(i) for i in [0, count) on up to `workers` threads. Each index is
/// handled by exactly one thread; callers write into per-index slots.
void parallel_for(std::size_t count, WorkerCount workers,
                  const std::function<void(std::size_t)>& body);

/// Fixed-shape pairwise (tree) reduction. The association order depends only
/// on values.size(), so the sum is bitwise reproducible.
double tree_sum(std::span<const double> values);

}  // namespace riesz
