// Execution selector for the data-parallel kernels. Every parallel kernel
// has a serial twin used as the reference in tests and benchmarks.
#pragma once

#include <chrono>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qsym {

enum class Exec { serial, openmp };

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline double wall_time() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

}  // namespace qsym
