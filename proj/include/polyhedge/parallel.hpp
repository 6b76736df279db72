#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace polyhedge {

// Worker cap: POLYHEDGE_THREADS if set, else hardware concurrency.
inline int max_threads() {
  if (const char* env = std::getenv("POLYHEDGE_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : (int)hw;
}

// Parallel map over [0, n). Work items must be independent; each writes only
// its own output slot, so results are deterministic regardless of schedule.
// The first exception (lowest worker id) is rethrown after the join.
inline void parallel_for(int n, const std::function<void(int)>& body) {
  int workers = std::min(max_threads(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = w; i < n; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace polyhedge
