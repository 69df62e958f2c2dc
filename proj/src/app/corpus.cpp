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

#include "grader/app/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "grader/core/json_io.hpp"
#include "grader/core/validate.hpp"
#include "grader/eval/samples.hpp"

namespace grader {
namespace {

using nlohmann::json;

std::string where(const std::filesystem::path& file, int line) {
  return file.string() + ":" + std::to_string(line) + ": ";
}

int line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + offset, '\n'));
}

template <typename T>
T decode(const json& j, const std::filesystem::path& file, int line) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kSchemaError, where(file, line) + e.what());
  }
}

}  // namespace

std::vector<std::string> Corpus::students() const {
  std::set<std::string> ids;
  for (const auto& s : submissions) ids.insert(s.student_id);
  return {ids.begin(), ids.end()};
}

const Submission* Corpus::find_submission(const std::string& student_id,
                                          const std::string& question_id) const {
  for (const auto& s : submissions) {
    if (s.student_id == student_id && s.question_id == question_id) return &s;
  }
  return nullptr;
}

BundlePaths BundlePaths::in(const std::filesystem::path& dir) {
  return {dir / "course.json", dir / "submissions.jsonl", dir / "grades.jsonl"};
}

Corpus ingest(const BundlePaths& paths) {
  return ingest(paths.course, paths.submissions, paths.grades);
}

Corpus ingest(const std::filesystem::path& course_file,
              const std::filesystem::path& submissions_file,
              const std::filesystem::path& grades_file) {
  Corpus corpus;

  std::ifstream in(course_file, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + course_file.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  json course_json;
  try {
    course_json = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSchemaError,
                where(course_file, line_of_offset(text, e.byte)) + e.what());
  }
  corpus.course = decode<Course>(course_json, course_file, 1);
  if (course_json.is_object()) {
    if (auto it = course_json.find("audience_line"); it != course_json.end()) {
      if (!it->is_string()) {
        throw Error(ErrorCode::kSchemaError, course_file.string() + ": audience_line must be a string");
      }
      corpus.audience_line = it->get<std::string>();
    }
  }
  auto findings = validate_course(corpus.course);
  if (!findings.empty()) {
    std::string msg = course_file.string() + ": " + findings.front().to_string();
    if (findings.size() > 1) msg += " (+" + std::to_string(findings.size() - 1) + " more)";
    throw Error(ErrorCode::kValidationError, msg);
  }
  const Course& course = corpus.course;

  std::map<std::pair<std::string, std::size_t>, Submission> by_key;
  for_each_json_line(submissions_file, [&](const json& j, int line) {
    auto s = decode<Submission>(j, submissions_file, line);
    const std::size_t qnum = course.question_number(s.question_id);
    if (qnum == 0) {
      throw Error(ErrorCode::kValidationError,
                  where(submissions_file, line) + "unknown question '" + s.question_id + "'");
    }
    if (s.student_id.empty()) {
      throw Error(ErrorCode::kValidationError, where(submissions_file, line) + "empty student_id");
    }
    if (by_key.count({s.student_id, qnum})) {
      throw Error(ErrorCode::kValidationError, where(submissions_file, line) +
                                                   "duplicate submission for student '" +
                                                   s.student_id + "', question '" +
                                                   s.question_id + "'");
    }
    by_key.emplace(std::make_pair(s.student_id, qnum), std::move(s));
  });
  std::set<std::string> students;
  for (const auto& [key, s] : by_key) students.insert(key.first);
  for (const auto& student : students) {
    for (std::size_t q = 1; q <= course.questions.size(); ++q) {
      if (!by_key.count({student, q})) {
        throw Error(ErrorCode::kValidationError,
                    submissions_file.string() + ": student '" + student +
                        "' has no submission for question '" + course.questions[q - 1].id + "'");
      }
    }
  }
  for (auto& [key, s] : by_key) corpus.submissions.push_back(std::move(s));

  std::set<std::pair<std::string, std::string>> instructor_seen;
  std::set<std::pair<std::string, std::string>> explicit_median;
  std::set<std::tuple<std::string, std::string, int>> peer_seen;
  for_each_json_line(grades_file, [&](const json& j, int line) {
    auto r = decode<GradeRecord>(j, grades_file, line);
    const auto at = where(grades_file, line);
    if (r.source.kind == GradeSource::Kind::kLlm) {
      throw Error(ErrorCode::kValidationError,
                  at + "model grades belong in a grading run ledger, not the human grades file");
    }
    if (!students.count(r.student_id)) {
      throw Error(ErrorCode::kValidationError, at + "unknown student '" + r.student_id + "'");
    }
    const Question* q = course.find_question(r.question_id);
    if (!q) {
      throw Error(ErrorCode::kValidationError, at + "unknown question '" + r.question_id + "'");
    }
    if (!(r.score >= 0.0 && r.score <= q->max_points)) {
      throw Error(ErrorCode::kValidationError,
                  at + "score " + std::to_string(r.score) + " outside [0, " +
                      std::to_string(q->max_points) + "]");
    }
    const auto key = std::make_pair(r.student_id, r.question_id);
    bool fresh = true;
    switch (r.source.kind) {
      case GradeSource::Kind::kInstructor: fresh = instructor_seen.insert(key).second; break;
      case GradeSource::Kind::kPeerMedian: fresh = explicit_median.insert(key).second; break;
      case GradeSource::Kind::kPeerRaw:
        fresh = peer_seen.insert({r.student_id, r.question_id, r.source.peer_index}).second;
        break;
      case GradeSource::Kind::kLlm: break;
    }
    if (!fresh) {
      throw Error(ErrorCode::kValidationError, at + "duplicate " + r.source.key() +
                                                   " grade for student '" + r.student_id +
                                                   "', question '" + r.question_id + "'");
    }
    corpus.human_grades.push_back(std::move(r));
  });
  for (auto& m : aggregate_peer_medians(corpus.human_grades)) {
    if (!explicit_median.count({m.student_id, m.question_id})) {
      corpus.human_grades.push_back(std::move(m));
    }
  }
  return corpus;
}

}  // namespace grader
