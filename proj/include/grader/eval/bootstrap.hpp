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

#ifndef GRADER_EVAL_BOOTSTRAP_HPP
#define GRADER_EVAL_BOOTSTRAP_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "grader/eval/samples.hpp"

namespace grader {

inline constexpr int kDefaultResamples = 10000;

struct BootstrapSummary {
  std::string question_id;
  GradeSource source;
  std::size_t n = 0;
  int resamples = 0;
  std::uint64_t seed = 0;
  double mean_of_means = 0.0;
  /// Population standard deviation of the resample means. Exactly 0 iff
  /// every resample mean came out identical.
  double std_of_means = 0.0;
};

/// Draws `resamples` resamples of size n with replacement from the sample
/// (indexed in student-id order) using mt19937_64 seeded with `seed`, and
/// summarizes their means. Throws EmptySample when n == 0 and InvalidSample
/// when resamples < 1.
BootstrapSummary bootstrap_summary(const GradeSample& sample, int resamples, std::uint64_t seed);

/// Summaries for every sample, each seeded with cell_seed(master_seed, ...).
/// Cells are independent; `threads` > 1 computes them concurrently with
/// identical results.
std::vector<BootstrapSummary> bootstrap_all(std::span<const GradeSample> samples, int resamples,
                                            std::uint64_t master_seed, unsigned threads = 1);

}  // namespace grader

#endif  // GRADER_EVAL_BOOTSTRAP_HPP
