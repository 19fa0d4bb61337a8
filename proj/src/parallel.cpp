#include "riesz/parallel.hpp"

#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace riesz {

void parallel_for(std::size_t count, WorkerCount workers,
                  const std::function<void(std::size_t)>& body) {
#ifdef _OPENMP
  const int threads = workers.value == 0 ? omp_get_max_threads() : static_cast<int>(workers.value);
  if (threads > 1 && count > 1) {
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto total = static_cast<long long>(count);
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
    for (long long i = 0; i < total; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    return;
  }
#else
  (void)workers;
#endif
  for (std::size_t i = 0; i < count; ++i) body(i);
}

double tree_sum(std::span<const double> values) {
  if (values.empty()) return 0.0;
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return tree_sum(values.first(half)) + tree_sum(values.subspan(half));
}

}  // namespace riesz
