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

#ifndef GRADER_LLM_MOCK_BACKEND_HPP
#define GRADER_LLM_MOCK_BACKEND_HPP

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "grader/llm/backend.hpp"

namespace grader {

/// Offline, deterministic backend that answers from a script.
///
/// ExactHash: the key is to_hex64(fnv1a64(prompt text)).
/// Substring: the key must occur in the prompt text; exactly one entry may
/// match.
///
/// Unmatched prompts yield a fatal reply "no script entry for prompt <hash>";
/// several Substring matches yield "ambiguous script match".
class MockBackend final : public Backend {
 public:
  enum class KeyMode { kExactHash, kSubstring };

  struct Entry {
    std::string key;
    std::string response;
    std::string finish_reason = "stop";
  };

  MockBackend(std::vector<Entry> script, KeyMode mode);
  MockBackend(const std::map<std::string, std::string>& script, KeyMode mode);

  /// Reads {"key_mode": "substring"|"exact_hash", "entries": [{"key", "response",
  /// "finish_reason"?}]}.
  static std::shared_ptr<MockBackend> from_file(const std::filesystem::path& path);

  BackendReply send(const ChatRequest& request) override;
  std::string name() const override { return "mock"; }

  static std::string prompt_key(const std::string& prompt_text);

 private:
  std::vector<Entry> script_;
  KeyMode mode_;
};

/// Handle form named after the operation it implements.
std::shared_ptr<MockBackend> mock_backend(const std::map<std::string, std::string>& script,
                                          MockBackend::KeyMode key_mode);

}  // namespace grader

#endif  // GRADER_LLM_MOCK_BACKEND_HPP
