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

#ifndef GRADER_APP_WORKSPACE_HPP
#define GRADER_APP_WORKSPACE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grader/core/model.hpp"

namespace grader {

/// A grading response that produced no usable score.
struct ReviewEntry {
  std::string student_id;
  std::string question_id;
  std::string strategy;  // cli name
  std::string model_id;
  std::string raw_response;
  std::string error;  // "<ErrorCode>: <detail>"

  bool operator==(const ReviewEntry&) const = default;
};

nlohmann::json to_json_value(const ReviewEntry& e);
ReviewEntry review_entry_from_json(const nlohmann::json& j);

/// On-disk layout of everything the commands produce for one course:
///
///   rubrics.json                    generated rubrics
///   grades/<model>__<strategy>.jsonl grade ledger per model and strategy
///   review_queue.jsonl              responses needing a human
///   runs/<run_id>/manifest.json     run summary
///   runs/<run_id>/completions.jsonl run log
///   reports/                        evaluation output
class Workspace {
 public:
  explicit Workspace(std::filesystem::path root) : root_(std::move(root)) {}

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path rubrics_file() const { return root_ / "rubrics.json"; }
  std::filesystem::path grades_dir() const { return root_ / "grades"; }
  std::filesystem::path ledger_file(const std::string& model_id, Strategy strategy) const;
  std::filesystem::path review_queue_file() const { return root_ / "review_queue.jsonl"; }
  std::filesystem::path run_dir(const std::string& run_id) const { return root_ / "runs" / run_id; }
  std::filesystem::path reports_dir() const { return root_ / "reports"; }

  /// Empty optional when rubrics.json does not exist.
  std::optional<std::vector<Rubric>> load_rubrics() const;
  void save_rubrics(const std::vector<Rubric>& rubrics) const;

  /// Every record of every ledger under grades/, ledgers in file-name order.
  std::vector<GradeRecord> load_all_ledgers() const;

  std::vector<ReviewEntry> load_review_queue() const;
  /// Drops queued entries for (model_id, strategy) and appends `fresh`.
  void replace_review_entries(const std::string& model_id, Strategy strategy,
                              const std::vector<ReviewEntry>& fresh) const;

 private:
  std::filesystem::path root_;
};

std::vector<GradeRecord> read_ledger(const std::filesystem::path& file);
void write_ledger(const std::filesystem::path& file, const std::vector<GradeRecord>& records);

/// Writes via a sibling temporary file and rename so readers never see a
/// half-written file.
void write_file_atomically(const std::filesystem::path& file, const std::string& content);
std::string read_file(const std::filesystem::path& file);

}  // namespace grader

#endif  // GRADER_APP_WORKSPACE_HPP
