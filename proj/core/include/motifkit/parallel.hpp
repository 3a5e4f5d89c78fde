#pragma once

#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace motifkit {

/// Run fn(0..count-1) across hardware threads with a static stride partition.
/// Callers write results into per-index slots, so the outcome is independent
/// of the thread schedule. The first exception is rethrown on the caller.
inline void parallel_for(int count, const std::function<void(int)>& fn) {
  if (count <= 0) return;
  unsigned hw = std::thread::hardware_concurrency();
  const int workers = static_cast<int>(hw == 0 ? 1 : hw);
  if (workers <= 1 || count == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  std::exception_ptr error;
  std::mutex error_mu;
  const int used = std::min(workers, count);
  threads.reserve(used);
  for (int t = 0; t < used; ++t) {
    threads.emplace_back([&, t] {
      try {
        for (int i = t; i < count; i += used) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace motifkit
