#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace weilcensus {

// Hardware concurrency, capped by WEIL_CENSUS_THREADS when set to a positive integer.
unsigned worker_count();

// Calls body(begin, end) on contiguous chunks of [0, n), one chunk per worker.
// The first exception thrown by any worker is rethrown.
template <class Body>
void parallel_chunks(std::uint64_t n, unsigned workers, Body body) {
  if (workers <= 1 || n < 2 * static_cast<std::uint64_t>(workers)) {
    body(std::uint64_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::uint64_t step = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = std::min(n, w * step), hi = std::min(n, lo + step);
    pool.emplace_back([&, w, lo, hi] {
      try {
        body(lo, hi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace weilcensus
