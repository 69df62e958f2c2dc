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

#include "grader/llm/http_backend.hpp"

#include <cstdlib>

#include <httplib.h>

#include "grader/error.hpp"
#include "grader/llm/config.hpp"

namespace grader {

using nlohmann::json;

json chat_request_body(const ChatRequest& request) {
  return {{"model", request.model},
          {"messages", json::array({{{"role", "user"}, {"content", request.user_message}}})},
          {"temperature", request.temperature},
          {"max_tokens", request.max_tokens}};
}

BackendReply parse_chat_response(int http_status, const std::string& body) {
  BackendReply reply;
  reply.http_status = http_status;
  if (http_status < 200 || http_status >= 300) {
    bool transient = http_status == 408 || http_status == 409 || http_status == 429 ||
                     http_status >= 500;
    reply.status = transient ? BackendReply::Status::kTransient : BackendReply::Status::kFatal;
    std::string detail = body.substr(0, 500);
    reply.error = "HTTP " + std::to_string(http_status) + ": " + detail;
    return reply;
  }
  try {
    auto j = json::parse(body);
    const auto& choice = j.at("choices").at(0);
    const auto& content = choice.at("message").at("content");
    reply.text = content.is_null() ? std::string{} : content.get<std::string>();
    if (auto it = choice.find("finish_reason"); it != choice.end() && it->is_string()) {
      reply.finish_reason = it->get<std::string>();
    }
    reply.status = BackendReply::Status::kOk;
  } catch (const json::exception& e) {
    reply.status = BackendReply::Status::kFatal;
    reply.error = std::string("malformed response body: ") + e.what();
  }
  return reply;
}

HttpBackend::HttpBackend(std::string endpoint, std::string api_key, std::chrono::seconds timeout)
    : api_key_(std::move(api_key)), timeout_(timeout) {
  auto scheme_end = endpoint.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorCode::kInvalidConfig, "endpoint must be a URL: " + endpoint);
  }
  auto path_start = endpoint.find('/', scheme_end + 3);
  origin_ = endpoint.substr(0, path_start);
  path_ = path_start == std::string::npos ? "/" : endpoint.substr(path_start);
}

std::string HttpBackend::api_key_from_env() {
  const char* key = std::getenv(kApiKeyEnvVar);
  if (key == nullptr || *key == '\0') {
    throw Error(ErrorCode::kConfigError, std::string(kApiKeyEnvVar) + " is not set");
  }
  return key;
}

BackendReply HttpBackend::send(const ChatRequest& request) {
  httplib::Client client(origin_);
  client.set_connection_timeout(timeout_);
  client.set_read_timeout(timeout_);
  client.set_write_timeout(timeout_);
  httplib::Headers headers{{"Authorization", "Bearer " + api_key_}};
  auto result =
      client.Post(path_, headers, chat_request_body(request).dump(), "application/json");
  if (!result) {
    BackendReply reply;
    reply.status = BackendReply::Status::kTransient;
    reply.error = "transport: " + httplib::to_string(result.error());
    return reply;
  }
  return parse_chat_response(result->status, result->body);
}

}  // namespace grader
