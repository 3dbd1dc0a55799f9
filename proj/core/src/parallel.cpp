#include "crooked/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace crooked {

unsigned worker_count() {
  if (const char* env = std::getenv("CROOKED_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {
// Nested calls run inline so an outer fan-out is not oversubscribed.
thread_local bool t_inside = false;
}  // namespace

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, std::size_t chunk) {
  if (n == 0) return;
  if (t_inside) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  chunk = std::max<std::size_t>(1, chunk);
  const std::size_t jobs = (n + chunk - 1) / chunk;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), jobs));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto run = [&] {
    t_inside = true;
    while (!stop.load(std::memory_order_relaxed)) {
      const std::size_t start = next.fetch_add(chunk);
      if (start >= n) return;
      const std::size_t end = std::min(n, start + chunk);
      try {
        for (std::size_t i = start; i < end; ++i) body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        stop = true;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  t_inside = false;
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace crooked
