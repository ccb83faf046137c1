#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace zerofree {

/// Worker cap: ZEROFREE_THREADS when set, otherwise machine parallelism.
inline int max_threads() {
  if (const char* env = std::getenv("ZEROFREE_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(begin, end) over disjoint chunks of [0, n). Results must be
/// written to per-index storage; chunking is deterministic and the merge
/// order is by index, so output never depends on scheduling. The lowest
///-indexed chunk's exception wins when several workers throw.
inline void parallel_chunks(std::size_t n,
                            const std::function<void(std::size_t, std::size_t)>& fn) {
  const int workers =
      static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(max_threads()), n));
  if (workers <= 1 || n < 256) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  const std::size_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::size_t lo = static_cast<std::size_t>(w) * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, &errors, w, lo, hi] {
      try {
        fn(lo, hi);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace zerofree
