#include "borel/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <string>

namespace borel {

unsigned worker_count() {
  if (const char* env = std::getenv("BOREL_DEGREES_THREADS")) {
    try {
      const long requested = std::stol(env);
      if (requested > 0) return static_cast<unsigned>(requested);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace borel
