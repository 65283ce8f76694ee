#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "blockspec/errors.hpp"

namespace blockspec {

// Runs body(0..count-1) across up to `threads` workers.  Callers write
// results into preallocated slots indexed by the argument, so the outcome
// is independent of scheduling.
inline void parallel_for(int count, int threads, const std::function<void(int)>& body) {
  if (count < 0) throw ConfigError("parallel_for: count must be >= 0");
  if (threads < 1) throw ConfigError("parallel_for: threads must be >= 1");
  if (count == 0) return;
  const int workers = std::min(threads, count);
  if (workers == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }

  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  const auto run = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        body(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(run);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace blockspec
