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

#ifndef GRADER_APP_CORPUS_HPP
#define GRADER_APP_CORPUS_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "grader/core/model.hpp"

namespace grader {

/// Validated course data: the course, every submission and the human grades.
struct Corpus {
  Course course;
  /// Optional course.json field substituted into the rubric-generation
  /// prompt; empty when absent.
  std::string audience_line;
  /// One per (student, question), students sorted, questions in course order.
  std::vector<Submission> submissions;
  /// Instructor and raw peer records as read, plus one peer-median record per
  /// (student, question) that has raw peer grades and no explicit median.
  std::vector<GradeRecord> human_grades;

  std::vector<std::string> students() const;
  const Submission* find_submission(const std::string& student_id,
                                    const std::string& question_id) const;
};

/// <dir>/course.json, <dir>/submissions.jsonl, <dir>/grades.jsonl
struct BundlePaths {
  std::filesystem::path course;
  std::filesystem::path submissions;
  std::filesystem::path grades;

  static BundlePaths in(const std::filesystem::path& dir);
};

/// Reads and validates a bundle. Malformed JSON or missing fields throw
/// SchemaError, broken invariants throw ValidationError; both name the file
/// and, for line-delimited files, the 1-based line.
///
/// Checks beyond validate_course: submissions are unique per (student,
/// question) and complete (every student answers every question); grades
/// come from instructor or peer sources, name a known student and question,
/// and lie within [0, max_points]; one instructor grade per (student,
/// question) at most.
Corpus ingest(const std::filesystem::path& course_file,
              const std::filesystem::path& submissions_file,
              const std::filesystem::path& grades_file);
Corpus ingest(const BundlePaths& paths);

/// Reads a newline-delimited JSON file, skipping blank lines. `fn` receives
/// the parsed value and its 1-based line number. Parse errors throw
/// SchemaError "<file>:<line>: ...".
template <typename Fn>
void for_each_json_line(const std::filesystem::path& file, Fn&& fn);

}  // namespace grader

#include "grader/app/corpus_inl.hpp"

#endif  // GRADER_APP_CORPUS_HPP
