#pragma once

// Index-parallel map used by every sweep: results land in input order and any
// reduction over them happens serially afterwards, so output never depends on
// the OpenMP schedule.

#include <cstddef>
#include <exception>
#include <mutex>
#include <vector>

namespace qcb {

// Applies the optional thread-count override (QCB_NUM_THREADS).
void configure_threads_from_env();

int max_threads();

template <class T, class F>
std::vector<T> serial_map(std::size_t n, F&& f) {
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(f(i));
  return out;
}

template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& f) {
  std::vector<T> out(n);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace qcb
