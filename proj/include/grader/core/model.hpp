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

#ifndef GRADER_CORE_MODEL_HPP
#define GRADER_CORE_MODEL_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace grader {

enum class RubricSource { kInstructor, kLlmGenerated };

struct RubricOption {
  int points = 0;
  std::string descriptor;

  bool operator==(const RubricOption&) const = default;
};

/// One criterion of a rubric and the point awards a grader may choose from.
struct RubricItem {
  std::string criterion;
  std::vector<RubricOption> options;

  /// Highest award among the options, 0 when there are none.
  int max_points() const;

  bool operator==(const RubricItem&) const = default;
};

struct Rubric {
  std::string question_id;
  std::vector<RubricItem> items;
  RubricSource source = RubricSource::kInstructor;

  /// Sum of every item's best award.
  int max_attainable() const;

  bool operator==(const Rubric&) const = default;
};

struct Question {
  std::string id;
  std::string text;
  int max_points = 0;
  std::string correct_answer;
  std::optional<Rubric> instructor_rubric;

  bool operator==(const Question&) const = default;
};

struct Course {
  std::string id;
  std::string name;
  std::vector<Question> questions;

  /// nullptr when no question carries `id`.
  const Question* find_question(std::string_view id) const;
  /// 1-based position of the question in course order, 0 when absent.
  std::size_t question_number(std::string_view id) const;

  bool operator==(const Course&) const = default;
};

struct Submission {
  std::string student_id;
  std::string question_id;
  std::string answer_text;

  /// Empty or whitespace-only answers are graded like any other; this only
  /// flags them for reporting.
  bool is_empty() const;

  bool operator==(const Submission&) const = default;
};

enum class Strategy { kAnswersOnly, kAnswersAndInstructorRubric, kAnswersAndLlmRubric };

inline constexpr Strategy kAllStrategies[] = {
    Strategy::kAnswersOnly, Strategy::kAnswersAndInstructorRubric,
    Strategy::kAnswersAndLlmRubric};

/// CLI spelling: "answers", "answers+rubric", "answers+llm-rubric".
std::string_view to_cli_name(Strategy s);
std::optional<Strategy> strategy_from_cli_name(std::string_view name);
/// Column label used in report tables.
std::string_view to_display_name(Strategy s);
bool requires_rubric(Strategy s);

/// Who produced a grade.
struct GradeSource {
  enum class Kind { kInstructor, kPeerMedian, kPeerRaw, kLlm };

  Kind kind = Kind::kInstructor;
  int peer_index = 0;                     // kPeerRaw only
  Strategy strategy = Strategy::kAnswersOnly;  // kLlm only
  std::string model_id;                   // kLlm only

  static GradeSource instructor() { return {}; }
  static GradeSource peer_median() { return {Kind::kPeerMedian, 0, {}, {}}; }
  static GradeSource peer_raw(int index) { return {Kind::kPeerRaw, index, {}, {}}; }
  static GradeSource llm(Strategy strategy, std::string model_id) {
    return {Kind::kLlm, 0, strategy, std::move(model_id)};
  }

  /// Stable textual key: "instructor", "peer", "peer-raw/<i>",
  /// "<model_id>/<strategy cli name>".
  std::string key() const;
  static std::optional<GradeSource> from_key(std::string_view key);

  auto operator<=>(const GradeSource&) const = default;
  bool operator==(const GradeSource&) const = default;
};

struct GradeRecord {
  std::string student_id;
  std::string question_id;
  GradeSource source;
  double score = 0.0;
  std::optional<std::string> rationale;
  std::optional<std::string> raw_response;
  std::optional<std::string> run_id;

  bool operator==(const GradeRecord&) const = default;
};

}  // namespace grader

#endif  // GRADER_CORE_MODEL_HPP
