#ifndef HYPERLAG_PARALLEL_HPP
#define HYPERLAG_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hyperlag {

/// Parallel-map capability handed to the algorithms. Work items are claimed
/// from a shared counter (idle workers take the next unclaimed index), and
/// every item writes only its own result slot, so outputs do not depend on the
/// number of workers.
class Executor {
 public:
  explicit Executor(unsigned jobs = 1) : jobs_(std::max(1U, jobs)) {}

  unsigned jobs() const { return jobs_; }

  template <class F>
  void for_each_index(std::size_t count, F&& f) const {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs_, count));
    if (workers <= 1) {
      for (std::size_t i = 0; i < count; ++i) f(i);
      return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next.store(count);
        }
      }
    };
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers - 1);
      for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
      run();
    }
    if (error) std::rethrow_exception(error);
  }

  /// out[i] = f(i).
  template <class T, class F>
  std::vector<T> map(std::size_t count, F&& f) const {
    std::vector<T> out(count);
    for_each_index(count, [&](std::size_t i) { out[i] = f(i); });
    return out;
  }

 private:
  unsigned jobs_;
};

}  // namespace hyperlag

#endif  // HYPERLAG_PARALLEL_HPP
