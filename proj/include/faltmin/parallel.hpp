#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace faltmin {

// Resolves a worker-count request: 0 (or negative) means machine parallelism.
inline unsigned effective_workers(int requested) {
  if (requested > 0) return static_cast<unsigned>(requested);
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

// Runs f(i) for i in [0, n) over a fixed block partition. Each worker owns a
// contiguous index range, so writes into caller-preallocated slots are
// race-free and results are independent of scheduling. The first exception
// thrown by any worker is rethrown after all threads join.
template <class F>
void parallel_for(std::size_t n, int workers, F&& f) {
  unsigned w = effective_workers(workers);
  if (n == 0) return;
  if (w <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  if (static_cast<std::size_t>(w) > n) w = static_cast<unsigned>(n);
  std::vector<std::thread> pool;
  pool.reserve(w);
  std::vector<std::exception_ptr> errors(w);
  for (unsigned t = 0; t < w; ++t) {
    std::size_t lo = n * t / w;
    std::size_t hi = n * (t + 1) / w;
    pool.emplace_back([&, lo, hi, t] {
      try {
        for (std::size_t i = lo; i < hi; ++i) f(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Compensated (Neumaier) accumulation: keeps quadrature and height sums
// accurate to a few ulps regardless of term count.
class NeumaierSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace faltmin
