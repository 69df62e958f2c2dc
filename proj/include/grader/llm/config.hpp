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

#ifndef GRADER_LLM_CONFIG_HPP
#define GRADER_LLM_CONFIG_HPP

#include <chrono>
#include <string>

#include <json.hpp>

namespace grader {

inline constexpr const char* kDefaultEndpoint = "https://api.openai.com/v1/chat/completions";
inline constexpr const char* kDefaultGraderModel = "gpt-4-0613";
inline constexpr const char* kDefaultRubricModel = "gpt-4-0613";
inline constexpr const char* kApiKeyEnvVar = "GRADER_API_KEY";

/// Decoding and transport settings for one model slot. Defaults: greedy
/// decoding, 2048-token completions.
struct LlmConfig {
  std::string model_id = kDefaultGraderModel;
  double temperature = 0.0;
  int max_tokens = 2048;
  std::string endpoint = kDefaultEndpoint;
  std::chrono::seconds timeout{120};
  int max_retries = 3;
  /// Optional ceiling on request starts per minute; 0 disables it.
  int requests_per_minute = 0;

  /// Throws InvalidConfig naming the first bad field.
  void validate() const;
};

/// Overlays the fields present in `j` onto `config`. Unknown keys are
/// rejected so typos in config files surface.
void apply_json(const nlohmann::json& j, LlmConfig& config);
nlohmann::json to_json_value(const LlmConfig& config);

}  // namespace grader

#endif  // GRADER_LLM_CONFIG_HPP
