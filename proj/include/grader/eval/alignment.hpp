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

#ifndef GRADER_EVAL_ALIGNMENT_HPP
#define GRADER_EVAL_ALIGNMENT_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grader/eval/bootstrap.hpp"
#include "grader/eval/samples.hpp"

namespace grader {

/// |mean(source) - mean(instructor)| for one question.
struct DeviationCell {
  std::string question_id;
  GradeSource source;
  double mean = 0.0;
  double instructor_mean = 0.0;
  double deviation = 0.0;
  /// 1 = closest to the instructor; ties share the lower rank. 0 for the
  /// instructor row itself.
  int rank = 0;
};

struct CourseDeviation {
  GradeSource source;
  double mean_abs_deviation = 0.0;
  std::size_t questions = 0;
};

struct AlignmentTable {
  std::vector<DeviationCell> cells;      // question order, then source order
  std::vector<CourseDeviation> course;   // source order, instructor excluded

  const DeviationCell* find(const std::string& question_id, const GradeSource& source) const;
  const CourseDeviation* find(const GradeSource& source) const;
};

struct AlignmentReport {
  AlignmentTable raw;                       // from plain sample means
  std::optional<AlignmentTable> resampled;  // from bootstrap means, when given
};

/// Deviations are treated as tied when they differ by less than this.
inline constexpr double kRankTieTolerance = 1e-9;

/// Needs an instructor sample for every question that has any sample,
/// otherwise throws MissingInstructorSample. `summaries` may be empty.
AlignmentReport alignment_report(std::span<const GradeSample> samples,
                                 std::span<const BootstrapSummary> summaries);

}  // namespace grader

#endif  // GRADER_EVAL_ALIGNMENT_HPP
