#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace hopfgen {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Named pass/fail entries; failures carry the first counterexample found.
struct Report {
  std::vector<CheckResult> checks;

  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  void merge(const Report& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.pass, c.detail});
  }
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Worker count used by the verification loops (1 = sequential).
inline int& worker_count() {
  static int workers = 1;
  return workers;
}

/// Runs body(i) for i in [0, n) on up to worker_count() threads.  The first
/// exception thrown by any task is rethrown on the calling thread.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers =
      std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, worker_count())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace hopfgen
