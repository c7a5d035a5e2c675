// Fork-join over contiguous index ranges.
//
// Work is split by index, results are merged by worker order, so the
// outcome is independent of scheduling and of the worker count.
#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace littlewood {

inline unsigned default_jobs() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

// Runs work(worker, lo, hi) over a partition of [0, total) into at most
// `jobs` contiguous blocks. The first exception (in worker order) is
// rethrown.
template <class Work>
void parallel_ranges(uint64_t total, unsigned jobs, Work&& work) {
  if (jobs == 0) jobs = 1;
  if (total > 0) jobs = static_cast<unsigned>(std::min<uint64_t>(jobs, total));
  if (jobs <= 1) {
    work(0u, uint64_t{0}, total);
    return;
  }
  const uint64_t chunk = (total + jobs - 1) / jobs;
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    const uint64_t lo = std::min<uint64_t>(total, w * chunk);
    const uint64_t hi = std::min<uint64_t>(total, lo + chunk);
    pool.emplace_back([&, w, lo, hi] {
      try {
        work(w, lo, hi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace littlewood
