#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace zernlets {

// Worker budget: hardware concurrency, capped by the ZERNLETS_THREADS
// environment variable when set to a positive integer.
inline int thread_budget() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("ZERNLETS_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0) hw = std::min<long>(hw, cap);
  }
  return hw;
}

// Runs fn(i) for i in [0, count) over contiguous chunks.  Falls back to a
// plain loop for small batches or a single-thread budget.
template <typename Fn>
void parallel_for(int count, Fn&& fn) {
  const int workers = std::min(thread_budget(), std::max(count / 256, 1));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const int chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int lo = w * chunk;
    const int hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (int i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace zernlets
