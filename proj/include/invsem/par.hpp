#pragma once

#include <cstdint>

#if defined(INVSEM_HAVE_OPENMP)
#include <omp.h>
#endif

namespace invsem::par {

// Runs f(i) for i in [0, n). The OpenMP build spreads iterations across
// threads; f must therefore be free of side effects beyond writes to
// disjoint slots. The serial build (and parallel_for_serial, kept as the
// reference implementation for tests and the benchmark) runs in id order.
template <typename F>
void parallel_for(int64_t n, F f) {
#if defined(INVSEM_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic, 16)
  for (int64_t i = 0; i < n; ++i) f(i);
#else
  for (int64_t i = 0; i < n; ++i) f(i);
#endif
}

template <typename F>
void parallel_for_serial(int64_t n, F f) {
  for (int64_t i = 0; i < n; ++i) f(i);
}

inline bool have_openmp() {
#if defined(INVSEM_HAVE_OPENMP)
  return true;
#else
  return false;
#endif
}

inline int thread_count() {
#if defined(INVSEM_HAVE_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace invsem::par
