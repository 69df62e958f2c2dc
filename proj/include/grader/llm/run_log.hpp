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

#ifndef GRADER_LLM_RUN_LOG_HPP
#define GRADER_LLM_RUN_LOG_HPP

#include <filesystem>
#include <fstream>
#include <mutex>
#include <vector>

#include "grader/llm/gateway.hpp"

namespace grader {

/// Append-only newline-delimited JSON sink of CompletionRecords. One line per
/// record, flushed per append; safe to share between threads.
class RunLog {
 public:
  explicit RunLog(const std::filesystem::path& path);

  void append(const CompletionRecord& record);
  std::size_t size() const;

  static std::vector<CompletionRecord> read(const std::filesystem::path& path);

 private:
  mutable std::mutex mu_;
  std::ofstream out_;
  std::size_t count_ = 0;
};

}  // namespace grader

#endif  // GRADER_LLM_RUN_LOG_HPP
