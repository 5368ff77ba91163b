#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

namespace curvcheck::harness {

template <class Result>
void run_ordered(std::size_t count, std::size_t threads, const std::function<Result(std::size_t)>& job,
                 const std::function<void(std::size_t, Result&&)>& collect) {
  if (threads == 0) threads = 1;
  threads = std::min(threads, std::max<std::size_t>(count, 1));

  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::map<std::size_t, Result> pending;
  std::size_t emit = 0;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      {
        std::lock_guard lock(mu);
        if (failure) return;
      }
      try {
        Result r = job(i);
        std::lock_guard lock(mu);
        pending.emplace(i, std::move(r));
        // The collector runs under the lock, so it never sees two results at once.
        for (auto it = pending.find(emit); it != pending.end(); it = pending.find(emit)) {
          collect(emit, std::move(it->second));
          pending.erase(it);
          ++emit;
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace curvcheck::harness
