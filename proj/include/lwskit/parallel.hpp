#pragma once

#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace lwskit {

// Parallel map over [lo, hi). Each worker handles a contiguous chunk; fn must
// write to disjoint state per index. jobs <= 1 runs inline.
inline void parallel_for(int lo, int hi, int jobs, const std::function<void(int)>& fn) {
  if (hi <= lo) return;
  if (jobs <= 1 || hi - lo == 1) {
    for (int i = lo; i < hi; ++i) fn(i);
    return;
  }
  int workers = std::min(jobs, hi - lo);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errs(workers);
  int span = (hi - lo + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    int a = lo + w * span, b = std::min(hi, a + span);
    pool.emplace_back([&, a, b, w] {
      try {
        for (int i = a; i < b; ++i) fn(i);
      } catch (...) {
        errs[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

}  // namespace lwskit
