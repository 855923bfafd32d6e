#include "quivermod/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace quivermod {

int configured_thread_count() {
  if (const char* env = std::getenv("QUIVERMOD_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
      // fall through to the machine default
    }
  }
  return omp_get_max_threads();
}

}  // namespace quivermod
