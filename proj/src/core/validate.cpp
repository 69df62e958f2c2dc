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

#include "grader/core/validate.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace grader {
namespace {

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

std::vector<Finding> validate_rubric(const Rubric& rubric, const Question& question,
                                     const std::string& path) {
  std::vector<Finding> out;
  if (rubric.question_id != question.id) {
    out.push_back({path + ".question_id",
                   "refers to '" + rubric.question_id + "', expected '" + question.id + "'"});
  }
  if (rubric.items.empty()) {
    out.push_back({path, "no items"});
    return out;
  }
  for (std::size_t i = 0; i < rubric.items.size(); ++i) {
    const auto& item = rubric.items[i];
    std::string item_path = path + ".items[" + std::to_string(i) + "]";
    if (item.options.empty()) out.push_back({item_path, "no point options"});
    for (std::size_t j = 0; j < item.options.size(); ++j) {
      if (item.options[j].points < 0) {
        out.push_back({item_path + ".options[" + std::to_string(j) + "]",
                       "negative points " + std::to_string(item.options[j].points)});
      }
    }
  }
  int sum = rubric.max_attainable();
  if (sum != question.max_points) {
    out.push_back({path, "max sum " + std::to_string(sum) + " ≠ max_points " +
                             std::to_string(question.max_points)});
  }
  return out;
}

std::vector<Finding> validate_course(const Course& course) {
  std::vector<Finding> out;
  if (course.id.empty()) out.push_back({"id", "empty"});
  if (course.questions.empty()) {
    out.push_back({"questions", "empty"});
    return out;
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < course.questions.size(); ++i) {
    const auto& q = course.questions[i];
    std::string path = "questions[" + (q.id.empty() ? std::to_string(i) : q.id) + "]";
    if (q.id.empty()) out.push_back({path + ".id", "empty"});
    if (!seen.insert(q.id).second) out.push_back({path + ".id", "duplicate id '" + q.id + "'"});
    if (q.max_points < 1) {
      out.push_back({path + ".max_points", "must be >= 1, got " + std::to_string(q.max_points)});
    }
    if (blank(q.correct_answer)) out.push_back({path + ".correct_answer", "empty"});
    if (q.instructor_rubric) {
      auto rubric_findings = validate_rubric(*q.instructor_rubric, q, path + ".rubric");
      out.insert(out.end(), rubric_findings.begin(), rubric_findings.end());
      if (q.instructor_rubric->source != RubricSource::kInstructor) {
        out.push_back({path + ".rubric.source", "instructor rubric marked as LLM-generated"});
      }
    }
  }
  return out;
}

}  // namespace grader
