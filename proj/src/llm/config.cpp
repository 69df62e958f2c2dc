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

#include "grader/llm/config.hpp"

#include "grader/error.hpp"

namespace grader {

void LlmConfig::validate() const {
  if (model_id.empty()) throw Error(ErrorCode::kInvalidConfig, "model_id is empty");
  if (!(temperature >= 0.0)) {
    throw Error(ErrorCode::kInvalidConfig, "temperature must be >= 0");
  }
  if (max_tokens <= 0) throw Error(ErrorCode::kInvalidConfig, "max_tokens must be > 0");
  if (endpoint.empty()) throw Error(ErrorCode::kInvalidConfig, "endpoint is empty");
  if (timeout.count() <= 0) throw Error(ErrorCode::kInvalidConfig, "timeout must be > 0");
  if (max_retries < 0) throw Error(ErrorCode::kInvalidConfig, "max_retries must be >= 0");
  if (requests_per_minute < 0) {
    throw Error(ErrorCode::kInvalidConfig, "requests_per_minute must be >= 0");
  }
}

void apply_json(const nlohmann::json& j, LlmConfig& config) {
  if (!j.is_object()) throw Error(ErrorCode::kConfigError, "model config must be an object");
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "model_id") {
        config.model_id = value.get<std::string>();
      } else if (key == "temperature") {
        config.temperature = value.get<double>();
      } else if (key == "max_tokens") {
        config.max_tokens = value.get<int>();
      } else if (key == "endpoint") {
        config.endpoint = value.get<std::string>();
      } else if (key == "timeout_s") {
        config.timeout = std::chrono::seconds(value.get<int>());
      } else if (key == "max_retries") {
        config.max_retries = value.get<int>();
      } else if (key == "requests_per_minute") {
        config.requests_per_minute = value.get<int>();
      } else if (key == "api_key") {
        throw Error(ErrorCode::kConfigError,
                    std::string("api keys are read from ") + kApiKeyEnvVar + " only");
      } else {
        throw Error(ErrorCode::kConfigError, "unknown model config key '" + key + "'");
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kConfigError, "model config key '" + key + "': " + e.what());
    }
  }
}

nlohmann::json to_json_value(const LlmConfig& config) {
  return {{"model_id", config.model_id},
          {"temperature", config.temperature},
          {"max_tokens", config.max_tokens},
          {"endpoint", config.endpoint},
          {"timeout_s", config.timeout.count()},
          {"max_retries", config.max_retries},
          {"requests_per_minute", config.requests_per_minute}};
}

}  // namespace grader
