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

#ifndef GRADER_LLM_HTTP_BACKEND_HPP
#define GRADER_LLM_HTTP_BACKEND_HPP

#include <chrono>
#include <string>

#include <json.hpp>

#include "grader/llm/backend.hpp"

namespace grader {

/// {"model", "messages": [{"role": "user", "content"}], "temperature", "max_tokens"}
nlohmann::json chat_request_body(const ChatRequest& request);

/// Maps an HTTP status and body onto a reply. 408, 409, 429 and 5xx are
/// transient; other non-2xx codes and malformed bodies are fatal. The text is
/// the first choice's message content.
BackendReply parse_chat_response(int http_status, const std::string& body);

/// Chat-completion over HTTP(S) JSON.
class HttpBackend final : public Backend {
 public:
  /// `endpoint` is a full URL such as https://api.openai.com/v1/chat/completions.
  HttpBackend(std::string endpoint, std::string api_key, std::chrono::seconds timeout);

  /// Reads the key from GRADER_API_KEY; throws ConfigError when unset.
  static std::string api_key_from_env();

  BackendReply send(const ChatRequest& request) override;
  std::string name() const override { return "http"; }

 private:
  std::string origin_;  // scheme://host[:port]
  std::string path_;
  std::string api_key_;
  std::chrono::seconds timeout_;
};

}  // namespace grader

#endif  // GRADER_LLM_HTTP_BACKEND_HPP
