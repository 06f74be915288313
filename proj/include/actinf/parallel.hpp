#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace actinf {

/// Runs fn(i) for i in [0, count) on `workers` threads. Each index is
/// processed exactly once; callers that write only to slot i get results
/// independent of the worker count and of scheduling. workers <= 1 runs
/// inline. The first exception thrown by any task is rethrown.
inline void parallel_for(std::size_t count, int workers,
                         const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  const int thread_count =
      static_cast<int>(std::min<std::size_t>(count, static_cast<std::size_t>(workers)));
  std::vector<std::thread> threads;
  threads.reserve(thread_count);
  for (int w = 0; w < thread_count; ++w) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace actinf
