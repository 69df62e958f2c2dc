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

#include "grader/llm/backoff.hpp"

#include <algorithm>
#include <thread>

namespace grader {

ExponentialBackoff::ExponentialBackoff(std::chrono::milliseconds base,
                                       std::chrono::milliseconds cap, std::uint64_t seed)
    : base_(base), cap_(cap), rng_(seed) {}

std::chrono::milliseconds ExponentialBackoff::ceiling(int retry_index) const {
  auto window = base_;
  for (int i = 0; i < retry_index && window < cap_; ++i) window *= 2;
  return std::min(window, cap_);
}

std::chrono::milliseconds ExponentialBackoff::delay(int retry_index) {
  auto upper = ceiling(retry_index).count();
  std::lock_guard lock(mu_);
  std::uniform_int_distribution<std::int64_t> dist(0, upper);
  return std::chrono::milliseconds(dist(rng_));
}

void real_sleep(std::chrono::milliseconds d) { std::this_thread::sleep_for(d); }

RateLimiter::RateLimiter(int requests_per_minute, SteadyClock clock, Sleeper sleeper)
    : interval_(requests_per_minute > 0
                    ? std::chrono::nanoseconds(std::chrono::minutes(1)) / requests_per_minute
                    : std::chrono::nanoseconds(0)),
      clock_(std::move(clock)),
      sleeper_(std::move(sleeper)) {}

void RateLimiter::acquire() {
  if (interval_.count() == 0) return;
  std::chrono::steady_clock::time_point slot;
  auto now = clock_();
  {
    std::lock_guard lock(mu_);
    slot = started_ ? std::max(now, next_slot_) : now;
    started_ = true;
    next_slot_ = slot + interval_;
  }
  if (slot > now) {
    sleeper_(std::chrono::ceil<std::chrono::milliseconds>(slot - now));
  }
}

}  // namespace grader
