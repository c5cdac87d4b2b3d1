#include "qcb/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcb {

void configure_threads_from_env() {
  const char* env = std::getenv("QCB_NUM_THREADS");
  if (env == nullptr) return;
  try {
    const int n = std::stoi(env);
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
  } catch (...) {
    // ignore malformed override
  }
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace qcb
