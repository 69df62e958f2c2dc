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

#include "grader/eval/bootstrap.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <random>
#include <thread>

#include "grader/error.hpp"
#include "grader/eval/rng.hpp"

namespace grader {

BootstrapSummary bootstrap_summary(const GradeSample& sample, int resamples, std::uint64_t seed) {
  if (sample.values.empty()) {
    throw Error(ErrorCode::kEmptySample, sample.question_id + "/" + sample.source.key());
  }
  if (resamples < 1) {
    throw Error(ErrorCode::kInvalidSample, "resamples must be >= 1");
  }
  // Index a student-sorted view so the summary does not depend on input order.
  auto sorted = sample.values;
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> scores;
  scores.reserve(sorted.size());
  for (const auto& [student, score] : sorted) scores.push_back(score);

  const std::size_t n = scores.size();
  std::mt19937_64 engine(seed);
  std::vector<double> means(static_cast<std::size_t>(resamples));
  for (auto& m : means) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += scores[uniform_index(engine, n)];
    m = sum / static_cast<double>(n);
  }

  BootstrapSummary out;
  out.question_id = sample.question_id;
  out.source = sample.source;
  out.n = n;
  out.resamples = resamples;
  out.seed = seed;
  auto [lo, hi] = std::minmax_element(means.begin(), means.end());
  if (*lo == *hi) {
    out.mean_of_means = *lo;
    out.std_of_means = 0.0;
    return out;
  }
  double total = 0.0;
  for (double m : means) total += m;
  const double mean = total / static_cast<double>(means.size());
  double acc = 0.0;
  for (double m : means) acc += (m - mean) * (m - mean);
  out.mean_of_means = mean;
  out.std_of_means = std::sqrt(acc / static_cast<double>(means.size()));
  return out;
}

std::vector<BootstrapSummary> bootstrap_all(std::span<const GradeSample> samples, int resamples,
                                            std::uint64_t master_seed, unsigned threads) {
  std::vector<BootstrapSummary> out(samples.size());
  auto run = [&](std::size_t i) {
    const auto& s = samples[i];
    out[i] = bootstrap_summary(s, resamples, cell_seed(master_seed, s.question_id, s.source.key()));
  };
  if (threads <= 1 || samples.size() < 2) {
    for (std::size_t i = 0; i < samples.size(); ++i) run(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, samples.size()); ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < samples.size(); i = next++) {
          try {
            run(i);
          } catch (...) {
            std::lock_guard lock(failure_mu);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace grader
