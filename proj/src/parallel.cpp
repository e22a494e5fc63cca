#include "arbor/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace arbor {
namespace {

class FirstError {
public:
  void capture() {
    std::lock_guard lock(mu_);
    if (!error_) error_ = std::current_exception();
  }
  void rethrow() {
    if (error_) std::rethrow_exception(error_);
  }

private:
  std::mutex mu_;
  std::exception_ptr error_;
};

}  // namespace

void parallel_chunks(
    std::size_t count, unsigned jobs,
    const std::function<void(unsigned, std::size_t, std::size_t)>& fn) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2) {
    fn(0, 0, count);
    return;
  }
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  FirstError error;
  std::vector<std::thread> workers;
  const std::size_t step = (count + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::size_t begin = std::min(count, w * step);
    const std::size_t end = std::min(count, begin + step);
    workers.emplace_back([&, w, begin, end] {
      try {
        fn(w, begin, end);
      } catch (...) {
        error.capture();
      }
    });
  }
  for (auto& th : workers) th.join();
  error.rethrow();
}

void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& fn) {
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  FirstError error;
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w)
    workers.emplace_back([&] {
      try {
        for (std::size_t i = next++; i < count; i = next++) fn(i);
      } catch (...) {
        error.capture();
      }
    });
  for (auto& th : workers) th.join();
  error.rethrow();
}

}  // namespace arbor
