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

#include "grader/llm/run_log.hpp"

#include <string>

#include "grader/error.hpp"

namespace grader {

RunLog::RunLog(const std::filesystem::path& path) : out_(path, std::ios::app) {
  if (!out_) throw Error(ErrorCode::kIoError, "cannot open run log " + path.string());
}

void RunLog::append(const CompletionRecord& record) {
  std::string line = to_json_value(record).dump() + "\n";
  std::lock_guard lock(mu_);
  out_ << line;
  out_.flush();
  ++count_;
}

std::size_t RunLog::size() const {
  std::lock_guard lock(mu_);
  return count_;
}

std::vector<CompletionRecord> RunLog::read(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read run log " + path.string());
  std::vector<CompletionRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(completion_from_json(nlohmann::json::parse(line)));
  }
  return out;
}

}  // namespace grader
