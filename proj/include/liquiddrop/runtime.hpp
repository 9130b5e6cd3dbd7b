#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <span>
#include <thread>
#include <vector>

namespace liquiddrop {

// Global worker cap. Results are bit-identical for any cap because every
// parallel loop writes into preassigned slots and reduces in index order.
inline std::atomic<unsigned>& thread_cap_storage() {
  static std::atomic<unsigned> cap{0};  // 0 = use hardware_concurrency
  return cap;
}

inline void set_max_threads(unsigned n) { thread_cap_storage().store(n); }

inline unsigned max_threads() {
  unsigned cap = thread_cap_storage().load();
  if (cap != 0) return cap;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs body(i) for i in [0, count). Static block partition; each index is
// processed exactly once and may write only to its own output slot.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  unsigned workers = max_threads();
  if (workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  if (workers > count) workers = static_cast<unsigned>(count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < count; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

// Pairwise (tree) summation; order fixed by the input order.
inline double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 8) {
    double acc = 0.0;
    for (double x : xs) acc += x;
    return acc;
  }
  std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

}  // namespace liquiddrop
