#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace ifl {

inline int default_thread_count() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Statically partitioned parallel loop over [0, n). Each worker owns one
// contiguous block, so the set of indices a worker touches is a pure function
// of (n, n_threads) and results never depend on scheduling order.
inline void parallel_for(std::size_t n, int n_threads,
                         const std::function<void(std::size_t, std::size_t)>& block_fn) {
  if (n == 0) return;
  int nt = std::max(1, n_threads);
  nt = static_cast<int>(std::min<std::size_t>(nt, n));
  if (nt == 1) {
    block_fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nt - 1);
  std::size_t chunk = (n + nt - 1) / nt;
  for (int t = 1; t < nt; ++t) {
    std::size_t lo = t * chunk;
    std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(block_fn, lo, hi);
  }
  block_fn(0, std::min(n, chunk));
  for (auto& th : pool) th.join();
}

}  // namespace ifl
