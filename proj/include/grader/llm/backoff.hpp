// Copyright 2026 The mooc-grader Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRADER_LLM_BACKOFF_HPP
#define GRADER_LLM_BACKOFF_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <random>

namespace grader {

/// Exponential backoff with full jitter: the wait before retry k (k = 0 for
/// the first retry) is uniform in [0, min(cap, base * 2^k)].
class ExponentialBackoff {
 public:
  explicit ExponentialBackoff(std::chrono::milliseconds base = std::chrono::seconds(1),
                              std::chrono::milliseconds cap = std::chrono::seconds(30),
                              std::uint64_t seed = std::random_device{}());

  /// Upper bound of the jitter window for retry `retry_index`.
  std::chrono::milliseconds ceiling(int retry_index) const;
  std::chrono::milliseconds delay(int retry_index);

 private:
  std::chrono::milliseconds base_;
  std::chrono::milliseconds cap_;
  std::mutex mu_;
  std::mt19937_64 rng_;
};

using Sleeper = std::function<void(std::chrono::milliseconds)>;
using SteadyClock = std::function<std::chrono::steady_clock::time_point()>;

void real_sleep(std::chrono::milliseconds d);

/// Spaces request starts at least 60s / requests_per_minute apart across all
/// callers. Excess callers block in acquire().
class RateLimiter {
 public:
  RateLimiter(int requests_per_minute, SteadyClock clock, Sleeper sleeper);

  void acquire();

 private:
  std::chrono::nanoseconds interval_;
  SteadyClock clock_;
  Sleeper sleeper_;
  std::mutex mu_;
  std::chrono::steady_clock::time_point next_slot_{};
  bool started_ = false;
};

}  // namespace grader

#endif  // GRADER_LLM_BACKOFF_HPP
