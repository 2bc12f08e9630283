// Copyright 2026 The tac-orient Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tacorient::detail {

/// Runs body(worker, begin, end) over `threads` contiguous slices of
/// [0, count). Worker w always receives the w-th slice, so per-worker
/// results can be reduced in a fixed order. The first exception is rethrown.
template <typename Body>
void parallel_slices(std::int64_t count, int threads, Body&& body) {
  threads = static_cast<int>(
      std::clamp<std::int64_t>(threads, 1, std::max<std::int64_t>(count, 1)));
  if (threads == 1) {
    body(0, std::int64_t{0}, count);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int w = 0; w < threads; ++w) {
    std::int64_t begin = count * w / threads;
    std::int64_t end = count * (w + 1) / threads;
    pool.emplace_back([&, w, begin, end] {
      try {
        body(w, begin, end);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace tacorient::detail
