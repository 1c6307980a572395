#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace absnorm::detail {

inline unsigned worker_count() {
  if (const char* env = std::getenv("ABSNORM_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

// Runs fn(i) for i in [0, count). Results must be written into preallocated
// slots so the outcome is independent of the thread schedule.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  unsigned workers = worker_count();
  if (workers <= 1 || count < 16) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : threads) t.join();
}

}  // namespace absnorm::detail
