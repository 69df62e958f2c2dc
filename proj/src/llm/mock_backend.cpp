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

#include "grader/llm/mock_backend.hpp"

#include <fstream>

#include <json.hpp>

#include "grader/core/hash.hpp"
#include "grader/error.hpp"

namespace grader {

MockBackend::MockBackend(std::vector<Entry> script, KeyMode mode)
    : script_(std::move(script)), mode_(mode) {}

MockBackend::MockBackend(const std::map<std::string, std::string>& script, KeyMode mode)
    : mode_(mode) {
  for (const auto& [key, response] : script) script_.push_back({key, response});
}

std::string MockBackend::prompt_key(const std::string& prompt_text) {
  return to_hex64(fnv1a64(prompt_text));
}

std::shared_ptr<MockBackend> MockBackend::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read mock script " + path.string());
  try {
    auto j = nlohmann::json::parse(in);
    auto mode_name = j.value("key_mode", std::string{"substring"});
    KeyMode mode;
    if (mode_name == "substring") {
      mode = KeyMode::kSubstring;
    } else if (mode_name == "exact_hash") {
      mode = KeyMode::kExactHash;
    } else {
      throw Error(ErrorCode::kConfigError,
                  path.string() + ": unknown key_mode '" + mode_name + "'");
    }
    std::vector<Entry> entries;
    for (const auto& e : j.at("entries")) {
      entries.push_back({e.at("key").get<std::string>(), e.at("response").get<std::string>(),
                         e.value("finish_reason", std::string{"stop"})});
    }
    return std::make_shared<MockBackend>(std::move(entries), mode);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kConfigError, path.string() + ": " + e.what());
  }
}

BackendReply MockBackend::send(const ChatRequest& request) {
  const std::string& prompt = request.user_message;
  const Entry* hit = nullptr;
  if (mode_ == KeyMode::kExactHash) {
    const std::string key = prompt_key(prompt);
    for (const auto& e : script_) {
      if (e.key == key) {
        hit = &e;
        break;
      }
    }
  } else {
    std::vector<const Entry*> hits;
    for (const auto& e : script_) {
      if (!e.key.empty() && prompt.find(e.key) != std::string::npos) hits.push_back(&e);
    }
    if (hits.size() > 1) {
      std::string keys;
      for (const auto* e : hits) keys += (keys.empty() ? "'" : ", '") + e->key + "'";
      return {BackendReply::Status::kFatal, 400, {}, {}, "ambiguous script match: " + keys};
    }
    if (!hits.empty()) hit = hits.front();
  }
  if (!hit) {
    return {BackendReply::Status::kFatal, 404, {}, {},
            "no script entry for prompt " + prompt_key(prompt)};
  }
  return {BackendReply::Status::kOk, 200, hit->response, hit->finish_reason, {}};
}

std::shared_ptr<MockBackend> mock_backend(const std::map<std::string, std::string>& script,
                                          MockBackend::KeyMode key_mode) {
  return std::make_shared<MockBackend>(script, key_mode);
}

}  // namespace grader
