#include "snest/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include <omp.h>

namespace snest {

int configured_threads() {
  const int machine = std::max(1, omp_get_num_procs());
  if (const char* env = std::getenv("SNEST_THREADS")) {
    try {
      const int requested = std::stoi(env);
      if (requested > 0) return std::min(requested, machine);
    } catch (...) {
      // malformed value: fall back to machine parallelism
    }
  }
  return machine;
}

}  // namespace snest
