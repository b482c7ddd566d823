#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pgw {

// Runs f(i) for i in [0, count) on up to `threads` workers with a static
// interleaved split. Results must be written to per-index slots for output to
// be independent of the thread count.
template <class F>
void parallel_for(std::size_t count, int threads, F&& f) {
  const std::size_t t = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(threads, 1)));
  if (t <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::exception_ptr err;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < t; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += t) f(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!err) err = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace pgw
