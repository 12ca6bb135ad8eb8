#include "gmmds/parallel.hpp"

#include <cstdlib>
#include <thread>

namespace gmmds {

int worker_count() {
  if (const char* env = std::getenv("GMMDS_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v > 256 ? 256 : v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw >= 1 ? static_cast<int>(hw) : 1;
}

}  // namespace gmmds
