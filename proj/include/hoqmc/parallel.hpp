#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace hoqmc {

inline std::size_t default_threads() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

// Static block partition over [0,n). Each index is visited exactly once and
// callers write only to their own slots, so results never depend on the
// worker count. n_threads = 0 picks the hardware default.
inline void parallel_for_chunked(
    std::size_t n, std::size_t n_threads,
    const std::function<void(std::size_t, std::size_t)>& body) {
  if (n == 0) return;
  std::size_t workers = n_threads == 0 ? default_threads() : n_threads;
  workers = std::min(workers, n);
  if (workers <= 1) {
    body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr err;
  std::mutex err_mu;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      try {
        body(lo, hi);
      } catch (...) {
        std::lock_guard<std::mutex> g(err_mu);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

inline void parallel_for(std::size_t n,
                         const std::function<void(std::size_t)>& body,
                         std::size_t n_threads = 0) {
  parallel_for_chunked(n, n_threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) body(i);
  });
}

// Sums values[lo,hi) by pairwise halving; the result is a fixed function of
// the inputs, independent of blocking used by callers above it.
inline double tree_sum(const double* values, std::size_t n) {
  if (n == 0) return 0.0;
  if (n == 1) return values[0];
  const std::size_t half = n / 2;
  return tree_sum(values, half) + tree_sum(values + half, n - half);
}

inline double tree_sum(const std::vector<double>& v) {
  return tree_sum(v.data(), v.size());
}

}  // namespace hoqmc
