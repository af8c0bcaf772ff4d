// Copyright 2026 The Covent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace covent {

/// Evaluates fn(i) for i in [0, count) on `workers` threads and returns the
/// results in index order. The first exception thrown by any worker is
/// rethrown after all threads have joined.
template <typename Fn>
auto parallel_map(std::size_t count, unsigned workers, Fn&& fn)
    -> std::vector<decltype(fn(std::size_t{}))> {
  using T = decltype(fn(std::size_t{}));
  std::vector<std::optional<T>> slots(count);
  workers = std::max(
      1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));

  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < count; i += workers) slots[i].emplace(fn(i));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace covent
