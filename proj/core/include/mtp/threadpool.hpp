#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

namespace mtp {

// Shared worker pool for data-parallel loops. Work is split into shards whose
// boundaries depend only on the problem size, never on the pool size, and each
// output location has exactly one writer, so results are bit-identical no
// matter how many threads actually run.
class ThreadPool {
 public:
  static ThreadPool& instance();

  explicit ThreadPool(int threads);
  ~ThreadPool();

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  int thread_count() const { return static_cast<int>(workers_.size()) + 1; }

  // Runs fn(begin, end) over [0, n) in contiguous shards of size `grain`.
  // Blocks until all shards are done. Nested calls run inline.
  void parallel_for(int64_t n, int64_t grain, const std::function<void(int64_t, int64_t)>& fn);

 private:
  struct Task {
    const std::function<void(int64_t, int64_t)>* fn = nullptr;
    std::atomic<int64_t> next{0};
    int64_t n = 0;
    int64_t shard = 0;
    std::atomic<int> remaining{0};
  };

  void worker_loop();
  static void run_shards(Task& t);

  std::vector<std::thread> workers_;
  std::mutex mu_;
  std::condition_variable cv_;
  std::condition_variable done_cv_;
  std::shared_ptr<Task> current_;
  uint64_t epoch_ = 0;
  bool stop_ = false;
};

// Convenience wrapper over the global pool.
void parallel_for(int64_t n, int64_t grain, const std::function<void(int64_t, int64_t)>& fn);

}  // namespace mtp
