#include "gl3/reduction.hpp"

#include <atomic>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace gl3 {

namespace {
std::atomic<bool> g_parallel{true};
}

bool parallel_enabled() {
#if defined(_OPENMP)
  return g_parallel.load(std::memory_order_relaxed);
#else
  return false;
#endif
}

void set_parallel(bool on) { g_parallel.store(on, std::memory_order_relaxed); }

void set_thread_count(int n) {
#if defined(_OPENMP)
  if (n <= 1) {
    set_parallel(false);
  } else {
    set_parallel(true);
    omp_set_num_threads(n);
  }
#else
  (void)n;
#endif
}

int thread_count() {
#if defined(_OPENMP)
  return parallel_enabled() ? omp_get_max_threads() : 1;
#else
  return 1;
#endif
}

}  // namespace gl3
