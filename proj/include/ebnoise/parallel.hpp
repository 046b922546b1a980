#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <optional>
#include <thread>
#include <vector>

namespace ebnoise {

/// Evaluates fn(i) for i in [0, n) on a few worker threads and returns the
/// results in index order.
template <typename Fn>
auto parallel_map(std::size_t n, Fn fn) -> std::vector<decltype(fn(std::size_t{0}))> {
  using T = decltype(fn(std::size_t{0}));
  std::vector<T> result;
  result.reserve(n);
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) result.push_back(fn(i));
    return result;
  }
  std::vector<std::optional<T>> out(n);
  std::vector<std::future<void>> jobs;
  jobs.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < n; i += workers) out[i] = fn(i);
    }));
  }
  for (auto& j : jobs) j.get();
  for (auto& v : out) result.push_back(std::move(*v));
  return result;
}

}  // namespace ebnoise
