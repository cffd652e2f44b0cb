#include "weilcensus/parallel.hpp"

#include <cstdlib>
#include <string>

namespace weilcensus {

unsigned worker_count() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("WEIL_CENSUS_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap > 0 && static_cast<unsigned long>(cap) < n) n = static_cast<unsigned>(cap);
    } catch (const std::exception&) {
      // unparsable values are ignored
    }
  }
  return n;
}

}  // namespace weilcensus
