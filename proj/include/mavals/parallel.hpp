#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace mav {

/// Runs fn(begin, end) on contiguous chunks of [0, n) using up to `threads`
/// threads. The first exception thrown by a worker is rethrown.
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn fn) {
  const std::size_t t = std::max<std::size_t>(1, std::min<std::size_t>(threads < 1 ? 1 : threads, n));
  if (t == 1) {
    fn(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(t);
  const std::size_t chunk = (n + t - 1) / t;
  for (std::size_t w = 0; w < t; ++w) {
    const std::size_t b = w * chunk, e = std::min(n, b + chunk);
    pool.emplace_back([&, w, b, e] {
      try {
        if (b < e) fn(b, e);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

}  // namespace mav
