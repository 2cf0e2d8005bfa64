#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mhz {

// run fn(0..count-1) across hardware threads; rethrows the first failure
template <class F>
void parallel_for(long count, F&& fn) {
  if (count <= 0) return;
  unsigned hw = std::thread::hardware_concurrency();
  long nthreads = std::min<long>(hw ? hw : 4, count);
  if (nthreads <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (long t = 0; t < nthreads; ++t)
    pool.emplace_back([&] {
      try {
        for (long i; (i = next.fetch_add(1)) < count;) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> guard(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

} // namespace mhz
