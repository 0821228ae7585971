#include "lsqt/parallel.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <string>

namespace lsqt {

int worker_count() { return omp_get_max_threads(); }

int apply_thread_cap_from_env() {
  if (const char* env = std::getenv("LSQT_THREADS")) {
    try {
      int cap = std::stoi(env);
      if (cap > 0) omp_set_num_threads(std::min(cap, omp_get_max_threads()));
    } catch (const std::exception&) {
      // unparseable value: leave the OpenMP default alone
    }
  }
  return omp_get_max_threads();
}

}  // namespace lsqt
