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

#ifndef GRADER_APP_REPORT_HPP
#define GRADER_APP_REPORT_HPP

#include <span>
#include <string>

#include "grader/core/model.hpp"
#include "grader/eval/alignment.hpp"
#include "grader/eval/bootstrap.hpp"
#include "grader/eval/samples.hpp"

namespace grader {

/// "Instr. Grades", "Peer Grades", "Peer 2", "<model> Instr. Ans.", ...
std::string source_label(const GradeSource& source);

/// Average grade per question and source, two decimals. Columns: course,
/// question, instructor, peer median, then the three strategies of every
/// model present, grouped under the model id. Missing cells print "-".
std::string render_raw_table(const Course& course, std::span<const GradeSample> samples);

/// Same layout with "mean ± std" of the bootstrap summaries.
std::string render_bootstrap_table(const Course& course,
                                   std::span<const BootstrapSummary> summaries);

/// Per-question deviations and ranks, then course-level mean absolute
/// deviation, for the raw table and, when present, the resampled one.
std::string render_alignment(const Course& course, const AlignmentReport& report);

}  // namespace grader

#endif  // GRADER_APP_REPORT_HPP
