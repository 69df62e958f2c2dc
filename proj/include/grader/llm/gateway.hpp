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

#ifndef GRADER_LLM_GATEWAY_HPP
#define GRADER_LLM_GATEWAY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grader/error.hpp"
#include "grader/llm/backend.hpp"
#include "grader/llm/backoff.hpp"
#include "grader/llm/config.hpp"
#include "grader/prompt/prompt_forge.hpp"

namespace grader {

struct AttemptRecord {
  int attempt = 0;  // 1-based
  std::string outcome;  // "ok", "transient", "fatal"
  int http_status = 0;
  std::string error;
  std::int64_t backoff_ms = 0;  // wait after this attempt, 0 if none
};

/// One complete() call as it appears in the run log.
struct CompletionRecord {
  std::string request_prompt;
  std::string response_text;
  std::string model_id;
  double temperature = 0.0;
  int max_tokens = 0;
  std::int64_t latency_ms = 0;
  int attempt_count = 0;
  std::string timestamp;  // ISO-8601 UTC of the first attempt
  bool truncated = false;
  std::string finish_reason;
  std::vector<AttemptRecord> attempts;
  std::optional<std::string> error;

  std::string prompt_kind;
  std::optional<std::string> question_id;
  std::optional<std::string> student_id;
  std::string template_version;
};

nlohmann::json to_json_value(const CompletionRecord& record);
CompletionRecord completion_from_json(const nlohmann::json& j);

/// TransportError or ProviderError, with the log record of the failed call.
class GatewayError : public Error {
 public:
  GatewayError(ErrorCode code, const std::string& message, CompletionRecord record)
      : Error(code, message), record_(std::move(record)) {}
  const CompletionRecord& record() const { return record_; }

 private:
  CompletionRecord record_;
};

/// Chat-completion client with retry, backoff and an optional rate ceiling.
/// complete() may be called concurrently.
class Gateway {
 public:
  struct Hooks {
    Sleeper sleeper = real_sleep;
    SteadyClock clock = [] { return std::chrono::steady_clock::now(); };
    std::shared_ptr<ExponentialBackoff> backoff;  // default: 1 s base, 30 s cap
  };

  Gateway(LlmConfig config, std::shared_ptr<Backend> backend);
  Gateway(LlmConfig config, std::shared_ptr<Backend> backend, Hooks hooks);

  /// Sends `prompt` as one user message. Transient failures are retried up to
  /// max_retries times; exhaustion throws TransportError, a non-retryable
  /// reply throws ProviderError. A length stop sets `truncated`.
  CompletionRecord complete(const RenderedPrompt& prompt);

  const LlmConfig& config() const { return config_; }
  const Backend& backend() const { return *backend_; }

 private:
  LlmConfig config_;
  std::shared_ptr<Backend> backend_;
  Hooks hooks_;
  RateLimiter limiter_;
};

std::string utc_timestamp_now();

}  // namespace grader

#endif  // GRADER_LLM_GATEWAY_HPP
