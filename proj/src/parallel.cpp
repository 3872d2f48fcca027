#include "curveproj/parallel.hpp"

#include <cstdlib>
#include <string>

namespace curveproj {

std::size_t worker_count() {
  std::size_t count = std::thread::hardware_concurrency();
  if (count == 0) count = 1;
  if (const char* cap = std::getenv("CURVEPROJ_THREADS"); cap != nullptr && *cap != '\0') {
    try {
      const long value = std::stol(cap);
      if (value >= 1 && static_cast<std::size_t>(value) < count) count = value;
    } catch (const std::exception&) {
      // Unparseable caps are ignored.
    }
  }
  return count;
}

}  // namespace curveproj
