#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace orbitope {

/// Number of worker threads multi-start sweeps may use. Reads the
/// ORBITOPE_LAB_THREADS environment variable; defaults to the hardware
/// concurrency. Always at least 1.
inline int thread_budget() {
  if (const char* env = std::getenv("ORBITOPE_LAB_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs body(i) for i in [0, n). Work items must be independent; results
/// should be written to pre-sized slots so the outcome does not depend on
/// the thread count.
template <typename F>
void parallel_for(int n, F&& body) {
  int workers = std::min(thread_budget(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace orbitope
