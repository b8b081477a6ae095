#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace lwcda {

/// Run fn(i) for i in [0, count) on up to `threads` workers. Work items must
/// not share mutable state; callers collect per-index results and reduce
/// sequentially so the outcome does not depend on the thread count.
inline void parallel_for(int count, const std::function<void(int)>& fn,
                         unsigned threads = std::thread::hardware_concurrency()) {
  if (count <= 0) return;
  if (threads <= 1 || count == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  if (threads > static_cast<unsigned>(count)) threads = static_cast<unsigned>(count);

  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&]() {
    for (;;) {
      const int i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace lwcda
