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

#ifndef GRADER_LLM_BACKEND_HPP
#define GRADER_LLM_BACKEND_HPP

#include <string>

namespace grader {

/// What goes over the wire: a single user-role message, no system message.
struct ChatRequest {
  std::string model;
  std::string user_message;
  double temperature = 0.0;
  int max_tokens = 0;
};

struct BackendReply {
  enum class Status {
    kOk,
    kTransient,  // connection failure, timeout, 429, 5xx: worth retrying
    kFatal,      // anything else the provider rejected
  };

  Status status = Status::kOk;
  int http_status = 0;
  std::string text;
  /// Provider's stop reason for the first choice; "length" means truncated.
  std::string finish_reason;
  std::string error;
};

/// A chat-completion provider. Implementations must be safe to call from
/// several threads at once.
class Backend {
 public:
  virtual ~Backend() = default;
  virtual BackendReply send(const ChatRequest& request) = 0;
  virtual std::string name() const = 0;
};

}  // namespace grader

#endif  // GRADER_LLM_BACKEND_HPP
