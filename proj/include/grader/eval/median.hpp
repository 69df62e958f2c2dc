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

#ifndef GRADER_EVAL_MEDIAN_HPP
#define GRADER_EVAL_MEDIAN_HPP

#include <span>

namespace grader {

/// Median of the peer scores for one submission. An even count yields the
/// mean of the two central order statistics, so four peers can produce half
/// points. Throws EmptyScores on an empty list.
double peer_median(std::span<const double> scores);

}  // namespace grader

#endif  // GRADER_EVAL_MEDIAN_HPP
