#pragma once

#include <exception>
#include <mutex>

#include <omp.h>

namespace tasep {

/// Number of OpenMP workers for a request; 0 means the runtime default.
inline int resolve_threads(int requested) { return requested > 0 ? requested : omp_get_max_threads(); }

/// Calls body(i) for i in [0, count). threads == 1 runs the plain serial loop,
/// which is the reference the parallel path is tested against. The body must
/// only write to slot i of preallocated storage. The first exception thrown
/// by any iteration is rethrown after the loop.
template <class Body>
void parallel_for(long count, int threads, Body&& body) {
  if (resolve_threads(threads) == 1) {
    for (long i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex guard;
#pragma omp parallel for schedule(dynamic, 16) num_threads(resolve_threads(threads))
  for (long i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(guard);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace tasep
