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

#ifndef GRADER_TESTS_SUPPORT_FIXTURES_HPP
#define GRADER_TESTS_SUPPORT_FIXTURES_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "grader/core/model.hpp"

namespace grader::testing {

inline constexpr const char* kGpt35 = "gpt-3.5-turbo-0613";
inline constexpr const char* kGpt4 = "gpt-4-0613";
inline constexpr int kStudents = 10;

/// One printed row of the reference average-grade table. Strategy columns
/// are in kAllStrategies order.
struct ReferenceRow {
  double instructor;
  double peer;
  std::array<double, 3> gpt35;
  std::array<double, 3> gpt4;
};

struct ReferenceCourse {
  std::string id;
  std::string name;
  std::vector<int> max_points;
  std::vector<ReferenceRow> rows;

  /// Mean for a column of row `q` (0-based).
  double mean(std::size_t q, const GradeSource& source) const;
};

/// astronomy (5 questions, 6/9/9/9/9 points), astrobiology (3 x 10),
/// hpa (4 x 4).
const std::vector<ReferenceCourse>& reference_courses();
const ReferenceCourse& reference_course(const std::string& id);

/// Every LLM source of the reference table.
std::vector<GradeSource> llm_sources();

/// `n` scores in [0, max_points] with one decimal at most whose sum is
/// exactly round(mean * n, 1 decimal). Whole points are used when the total
/// allows it, then halves, then tenths. With `spread` the values vary around
/// the mean, otherwise they are as equal as the granularity permits.
/// Throws std::invalid_argument when the mean is not reachable.
std::vector<double> scores_with_mean(double mean, int max_points, int n, bool spread);

/// Raw peer grades whose median is `median` (a multiple of 0.5): three
/// peers for whole medians, four for halves, clamped to [0, max_points].
std::vector<double> peers_for_median(double median, int max_points);

/// "s01".."s10"
std::string student_id(int i);

/// A course bundle whose ledgers reproduce the reference means.
struct Fixture {
  Course course;
  std::string audience_line;
  std::vector<Submission> submissions;
  std::vector<GradeRecord> human_grades;  // instructor + peer-raw
  /// LLM grades per source key.
  std::map<std::string, std::vector<GradeRecord>> llm_grades;
  /// Response text the mock model returns for the rubric prompt.
  std::string rubric_response;
};

Fixture build_fixture(const ReferenceCourse& reference);

/// Writes <dir>/{course.json, submissions.jsonl, grades.jsonl} and
/// <dir>/mock/{rubric.json, <model>__<strategy>.json}. Output is a pure
/// function of the fixture.
void write_bundle(const Fixture& fixture, const std::filesystem::path& dir);

/// "9/10\n\n..." style response for a score.
std::string mock_grade_response(double score, int max_points, Strategy strategy);

/// Text tag that starts every fixture answer; unique per (student, question).
std::string answer_tag(const std::string& student, const std::string& question_id);

}  // namespace grader::testing

#endif  // GRADER_TESTS_SUPPORT_FIXTURES_HPP
