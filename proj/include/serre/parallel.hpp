#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace serre {

inline int thread_budget() {
  if (const char* env = std::getenv("SERRE_LAB_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// Applies fn to every index in [0, count); fn must write results into
// per-index slots so aggregation stays deterministic.
inline void parallel_for(long long count, const std::function<void(long long)>& fn) {
  int nt = thread_budget();
  if (nt <= 1 || count <= 1) {
    for (long long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long long> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min<long long>(nt, count); ++t) {
    pool.emplace_back([&] {
      for (;;) {
        long long i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace serre
