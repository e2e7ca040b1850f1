#pragma once

#include <array>
#include <condition_variable>
#include <cstddef>
#include <deque>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <time.h>
#include <vector>

namespace mrrr {

// R-tasks high, S-tasks medium, C-tasks low.
enum class Priority : std::size_t { high = 0, medium = 1, low = 2 };

inline double thread_cpu_seconds() {
  timespec ts{};
  clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) + 1e-9 * static_cast<double>(ts.tv_nsec);
}

// Three FIFO queues polled from high to low priority. run() returns once every task,
// including tasks submitted by running tasks, has finished.
class TaskPool {
 public:
  using Task = std::function<void()>;

  explicit TaskPool(std::size_t workers) : workers_(workers == 0 ? 1 : workers), busy_(workers_) {}

  std::size_t workers() const { return workers_; }

  void submit(Priority p, Task task) {
    {
      std::lock_guard lock(mutex_);
      queues_[static_cast<std::size_t>(p)].push_back(std::move(task));
      ++pending_;
    }
    ready_.notify_one();
  }

  void run() {
    if (workers_ == 1) {
      work(0);
    } else {
      std::vector<std::jthread> threads;
      threads.reserve(workers_ - 1);
      for (std::size_t w = 1; w < workers_; ++w) threads.emplace_back([this, w] { work(w); });
      work(0);
    }
    if (error_) {
      auto e = error_;
      error_ = nullptr;
      std::rethrow_exception(e);
    }
  }

  // Accumulated CPU time each worker spent inside tasks.
  const std::vector<double>& busy_seconds() const { return busy_; }

  std::size_t executed() const { return executed_; }

 private:
  void work(std::size_t id) {
    std::unique_lock lock(mutex_);
    while (true) {
      ready_.wait(lock, [this] { return pending_ == 0 || has_task(); });
      if (!has_task()) {
        if (pending_ == 0) break;
        continue;
      }
      Task task;
      for (auto& q : queues_) {
        if (!q.empty()) {
          task = std::move(q.front());
          q.pop_front();
          break;
        }
      }
      const bool skip = static_cast<bool>(error_);
      lock.unlock();
      const double start = thread_cpu_seconds();
      if (!skip) {
        try {
          task();
        } catch (...) {
          std::lock_guard guard(mutex_);
          if (!error_) error_ = std::current_exception();
        }
      }
      const double spent = thread_cpu_seconds() - start;
      lock.lock();
      busy_[id] += spent;
      ++executed_;
      if (--pending_ == 0) ready_.notify_all();
    }
  }

  bool has_task() const {
    for (const auto& q : queues_)
      if (!q.empty()) return true;
    return false;
  }

  std::size_t workers_;
  std::vector<double> busy_;
  std::array<std::deque<Task>, 3> queues_;
  std::size_t pending_ = 0;
  std::size_t executed_ = 0;
  std::mutex mutex_;
  std::condition_variable ready_;
  std::exception_ptr error_;
};

}  // namespace mrrr
