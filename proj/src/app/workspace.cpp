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

#include "grader/app/workspace.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "grader/app/corpus.hpp"
#include "grader/core/json_io.hpp"
#include "grader/error.hpp"

namespace grader {

using nlohmann::json;

nlohmann::json to_json_value(const ReviewEntry& e) {
  return json{{"student_id", e.student_id}, {"question_id", e.question_id},
              {"strategy", e.strategy},     {"model_id", e.model_id},
              {"raw_response", e.raw_response}, {"error", e.error}};
}

ReviewEntry review_entry_from_json(const nlohmann::json& j) {
  ReviewEntry e;
  j.at("student_id").get_to(e.student_id);
  j.at("question_id").get_to(e.question_id);
  j.at("strategy").get_to(e.strategy);
  e.model_id = j.value("model_id", std::string{});
  j.at("raw_response").get_to(e.raw_response);
  j.at("error").get_to(e.error);
  return e;
}

std::filesystem::path Workspace::ledger_file(const std::string& model_id, Strategy strategy) const {
  std::string name = model_id + "__" + std::string(to_cli_name(strategy)) + ".jsonl";
  std::replace(name.begin(), name.end(), '/', '_');
  return grades_dir() / name;
}

std::optional<std::vector<Rubric>> Workspace::load_rubrics() const {
  if (!std::filesystem::exists(rubrics_file())) return std::nullopt;
  try {
    return json::parse(read_file(rubrics_file())).get<std::vector<Rubric>>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kSchemaError, rubrics_file().string() + ": " + e.what());
  }
}

void Workspace::save_rubrics(const std::vector<Rubric>& rubrics) const {
  write_file_atomically(rubrics_file(), json(rubrics).dump(2) + "\n");
}

std::vector<GradeRecord> Workspace::load_all_ledgers() const {
  std::vector<GradeRecord> out;
  if (!std::filesystem::is_directory(grades_dir())) return out;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(grades_dir())) {
    if (entry.path().extension() == ".jsonl") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    auto records = read_ledger(f);
    out.insert(out.end(), records.begin(), records.end());
  }
  return out;
}

std::vector<ReviewEntry> Workspace::load_review_queue() const {
  std::vector<ReviewEntry> out;
  if (!std::filesystem::exists(review_queue_file())) return out;
  for_each_json_line(review_queue_file(), [&](const json& j, int line) {
    try {
      out.push_back(review_entry_from_json(j));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kSchemaError,
                  review_queue_file().string() + ":" + std::to_string(line) + ": " + e.what());
    }
  });
  return out;
}

void Workspace::replace_review_entries(const std::string& model_id, Strategy strategy,
                                       const std::vector<ReviewEntry>& fresh) const {
  auto entries = load_review_queue();
  const std::string strategy_name(to_cli_name(strategy));
  std::erase_if(entries, [&](const ReviewEntry& e) {
    return e.model_id == model_id && e.strategy == strategy_name;
  });
  entries.insert(entries.end(), fresh.begin(), fresh.end());
  std::string content;
  for (const auto& e : entries) content += to_json_value(e).dump() + "\n";
  write_file_atomically(review_queue_file(), content);
}

std::vector<GradeRecord> read_ledger(const std::filesystem::path& file) {
  std::vector<GradeRecord> out;
  for_each_json_line(file, [&](const json& j, int line) {
    try {
      out.push_back(j.get<GradeRecord>());
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kSchemaError,
                  file.string() + ":" + std::to_string(line) + ": " + e.what());
    }
  });
  return out;
}

void write_ledger(const std::filesystem::path& file, const std::vector<GradeRecord>& records) {
  std::string content;
  for (const auto& r : records) content += json(r).dump() + "\n";
  write_file_atomically(file, content);
}

void write_file_atomically(const std::filesystem::path& file, const std::string& content) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIoError, "cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw Error(ErrorCode::kIoError, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + file.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace grader
