#ifndef CAUSAL_LAB_DETAIL_PARALLEL_HPP
#define CAUSAL_LAB_DETAIL_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

namespace causal_lab::cli {

template <typename T>
std::vector<T> parallel_map(const std::vector<std::function<T()>>& tasks) {
  std::vector<std::optional<T>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failureMutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        slots[i].emplace(tasks[i]());
      } catch (...) {
        std::lock_guard lock(failureMutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned n = std::min<std::size_t>(worker_count(), std::max<std::size_t>(1, tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  std::vector<T> out;
  out.reserve(tasks.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace causal_lab::cli

#endif  // CAUSAL_LAB_DETAIL_PARALLEL_HPP
