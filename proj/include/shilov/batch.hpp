#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "shilov/core.hpp"

namespace shilov::batch {

// Maps fn over [0, n) into a preallocated slot array. threads == 1 runs
// the serial reference loop; any other value hands the loop to OpenMP.
// Results are written by index, so both paths produce identical output
// and the suite stays deterministic under sharding.
template <class Fn>
inline void parallel_index_map(int n, int threads, double* out, Fn&& fn) {
  if (threads == 1) {
    for (int i = 0; i < n; ++i) out[i] = fn(i);
    return;
  }
#ifdef _OPENMP
  if (threads > 1) omp_set_num_threads(threads);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) out[i] = fn(i);
#else
  for (int i = 0; i < n; ++i) out[i] = fn(i);
#endif
}

// Per-sample residual kernel with exception capture: a throwing sample
// reports +inf and the first captured message wins deterministically
// (smallest sample index), independent of thread interleaving.
template <class Fn>
inline std::pair<double, std::string> max_residual(int n, int threads,
                                                   Fn&& fn) {
  std::vector<double> slots(static_cast<std::size_t>(n), 0.0);
  std::vector<std::string> errors(static_cast<std::size_t>(n));
  parallel_index_map(n, threads, slots.data(), [&](int i) -> double {
    try {
      return fn(i);
    } catch (const std::exception& ex) {
      errors[static_cast<std::size_t>(i)] = ex.what();
      return std::numeric_limits<double>::infinity();
    }
  });
  double worst = 0.0;
  std::string detail;
  for (int i = 0; i < n; ++i) {
    if (!errors[static_cast<std::size_t>(i)].empty() && detail.empty())
      detail = "sample " + std::to_string(i) + ": " +
               errors[static_cast<std::size_t>(i)];
    worst = std::max(worst, slots[static_cast<std::size_t>(i)]);
  }
  return {worst, detail};
}

}  // namespace shilov::batch
