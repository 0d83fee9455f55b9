#include "mtp/threadpool.hpp"

#include <algorithm>
#include <cstdlib>

namespace mtp {

namespace {
int pool_threads_from_env() {
  if (const char* s = std::getenv("MTP_THREADS")) {
    int v = std::atoi(s);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

thread_local bool in_parallel_region = false;
}  // namespace

ThreadPool& ThreadPool::instance() {
  static ThreadPool pool(pool_threads_from_env());
  return pool;
}

ThreadPool::ThreadPool(int threads) {
  for (int i = 1; i < threads; ++i) {
    workers_.emplace_back([this] { worker_loop(); });
  }
}

ThreadPool::~ThreadPool() {
  {
    std::lock_guard<std::mutex> lk(mu_);
    stop_ = true;
  }
  cv_.notify_all();
  for (auto& w : workers_) w.join();
}

void ThreadPool::run_shards(Task& t) {
  while (true) {
    int64_t b = t.next.fetch_add(t.shard, std::memory_order_relaxed);
    if (b >= t.n) break;
    int64_t e = std::min(b + t.shard, t.n);
    (*t.fn)(b, e);
    t.remaining.fetch_sub(1, std::memory_order_acq_rel);
  }
}

void ThreadPool::worker_loop() {
  in_parallel_region = true;
  uint64_t seen = 0;
  while (true) {
    std::shared_ptr<Task> t;
    {
      std::unique_lock<std::mutex> lk(mu_);
      cv_.wait(lk, [&] { return stop_ || (current_ != nullptr && epoch_ != seen); });
      if (stop_) return;
      t = current_;
      seen = epoch_;
    }
    run_shards(*t);
    {
      std::lock_guard<std::mutex> lk(mu_);
      if (t->remaining.load(std::memory_order_acquire) == 0) done_cv_.notify_all();
    }
  }
}

void ThreadPool::parallel_for(int64_t n, int64_t grain, const std::function<void(int64_t, int64_t)>& fn) {
  if (n <= 0) return;
  grain = std::max<int64_t>(1, grain);
  int64_t shards = (n + grain - 1) / grain;
  if (shards == 1 || workers_.empty() || in_parallel_region) {
    fn(0, n);
    return;
  }
  auto t = std::make_shared<Task>();
  t->fn = &fn;
  t->n = n;
  t->shard = grain;
  t->remaining.store(static_cast<int>(shards), std::memory_order_relaxed);
  {
    std::lock_guard<std::mutex> lk(mu_);
    current_ = t;
    ++epoch_;
  }
  cv_.notify_all();
  in_parallel_region = true;
  run_shards(*t);
  in_parallel_region = false;
  {
    std::unique_lock<std::mutex> lk(mu_);
    done_cv_.wait(lk, [&] { return t->remaining.load(std::memory_order_acquire) == 0; });
    current_.reset();
  }
}

void parallel_for(int64_t n, int64_t grain, const std::function<void(int64_t, int64_t)>& fn) {
  ThreadPool::instance().parallel_for(n, grain, fn);
}

}  // namespace mtp
