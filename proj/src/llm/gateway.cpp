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

#include "grader/llm/gateway.hpp"

#include <ctime>

namespace grader {

using nlohmann::json;

std::string utc_timestamp_now() {
  auto now = std::chrono::system_clock::now();
  auto secs = std::chrono::system_clock::to_time_t(now);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()) % 1000;
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
  char out[40];
  std::snprintf(out, sizeof out, "%s.%03dZ", buf, static_cast<int>(ms.count()));
  return out;
}

json to_json_value(const CompletionRecord& r) {
  json attempts = json::array();
  for (const auto& a : r.attempts) {
    json entry{{"attempt", a.attempt}, {"outcome", a.outcome}, {"http_status", a.http_status}};
    if (!a.error.empty()) entry["error"] = a.error;
    if (a.backoff_ms > 0) entry["backoff_ms"] = a.backoff_ms;
    attempts.push_back(std::move(entry));
  }
  json j{{"timestamp", r.timestamp},
         {"model_id", r.model_id},
         {"temperature", r.temperature},
         {"max_tokens", r.max_tokens},
         {"prompt_kind", r.prompt_kind},
         {"template_version", r.template_version},
         {"request_prompt", r.request_prompt},
         {"response_text", r.response_text},
         {"finish_reason", r.finish_reason},
         {"truncated", r.truncated},
         {"latency_ms", r.latency_ms},
         {"attempt_count", r.attempt_count},
         {"attempts", std::move(attempts)}};
  if (r.question_id) j["question_id"] = *r.question_id;
  if (r.student_id) j["student_id"] = *r.student_id;
  if (r.error) j["error"] = *r.error;
  return j;
}

CompletionRecord completion_from_json(const json& j) {
  CompletionRecord r;
  r.timestamp = j.at("timestamp").get<std::string>();
  r.model_id = j.at("model_id").get<std::string>();
  r.temperature = j.at("temperature").get<double>();
  r.max_tokens = j.at("max_tokens").get<int>();
  r.prompt_kind = j.value("prompt_kind", std::string{});
  r.template_version = j.value("template_version", std::string{});
  r.request_prompt = j.at("request_prompt").get<std::string>();
  r.response_text = j.at("response_text").get<std::string>();
  r.finish_reason = j.value("finish_reason", std::string{});
  r.truncated = j.value("truncated", false);
  r.latency_ms = j.value("latency_ms", std::int64_t{0});
  r.attempt_count = j.at("attempt_count").get<int>();
  for (const auto& a : j.value("attempts", json::array())) {
    r.attempts.push_back({a.at("attempt").get<int>(), a.at("outcome").get<std::string>(),
                          a.value("http_status", 0), a.value("error", std::string{}),
                          a.value("backoff_ms", std::int64_t{0})});
  }
  if (j.contains("question_id")) r.question_id = j["question_id"].get<std::string>();
  if (j.contains("student_id")) r.student_id = j["student_id"].get<std::string>();
  if (j.contains("error")) r.error = j["error"].get<std::string>();
  return r;
}

Gateway::Gateway(LlmConfig config, std::shared_ptr<Backend> backend)
    : Gateway(std::move(config), std::move(backend), Hooks{}) {}

Gateway::Gateway(LlmConfig config, std::shared_ptr<Backend> backend, Hooks hooks)
    : config_(std::move(config)),
      backend_(std::move(backend)),
      hooks_(std::move(hooks)),
      limiter_(config_.requests_per_minute, hooks_.clock, hooks_.sleeper) {
  config_.validate();
  if (!backend_) throw Error(ErrorCode::kInvalidConfig, "no backend");
  if (!hooks_.backoff) hooks_.backoff = std::make_shared<ExponentialBackoff>();
}

CompletionRecord Gateway::complete(const RenderedPrompt& prompt) {
  CompletionRecord record;
  record.request_prompt = prompt.text;
  record.model_id = config_.model_id;
  record.temperature = config_.temperature;
  record.max_tokens = config_.max_tokens;
  record.prompt_kind = std::string(to_string(prompt.kind));
  record.question_id = prompt.question_id;
  record.student_id = prompt.student_id;
  record.template_version = prompt.template_version;
  record.timestamp = utc_timestamp_now();

  if (prompt.text.empty()) {
    record.error = "empty prompt";
    throw GatewayError(ErrorCode::kProviderError, "empty prompt", std::move(record));
  }

  const ChatRequest request{config_.model_id, prompt.text, config_.temperature,
                            config_.max_tokens};
  const auto started = hooks_.clock();
  auto elapsed_ms = [&] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(hooks_.clock() - started)
        .count();
  };

  for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
    limiter_.acquire();
    BackendReply reply;
    try {
      reply = backend_->send(request);
    } catch (const std::exception& e) {
      reply.status = BackendReply::Status::kTransient;
      reply.error = e.what();
    }
    record.attempt_count = attempt + 1;
    AttemptRecord log{attempt + 1, "ok", reply.http_status, reply.error, 0};

    if (reply.status == BackendReply::Status::kOk) {
      record.attempts.push_back(std::move(log));
      record.response_text = std::move(reply.text);
      record.finish_reason = std::move(reply.finish_reason);
      record.truncated = record.finish_reason == "length";
      record.latency_ms = elapsed_ms();
      return record;
    }
    if (reply.status == BackendReply::Status::kFatal) {
      log.outcome = "fatal";
      record.attempts.push_back(std::move(log));
      record.latency_ms = elapsed_ms();
      record.error = reply.error;
      throw GatewayError(ErrorCode::kProviderError, reply.error, std::move(record));
    }
    log.outcome = "transient";
    if (attempt < config_.max_retries) {
      auto wait = hooks_.backoff->delay(attempt);
      log.backoff_ms = wait.count();
      record.attempts.push_back(std::move(log));
      hooks_.sleeper(wait);
    } else {
      record.attempts.push_back(std::move(log));
    }
  }
  record.latency_ms = elapsed_ms();
  std::string last = record.attempts.empty() ? std::string{} : record.attempts.back().error;
  record.error = "retries exhausted after " + std::to_string(record.attempt_count) +
                 " attempts: " + last;
  throw GatewayError(ErrorCode::kTransportError, *record.error, std::move(record));
}

}  // namespace grader
