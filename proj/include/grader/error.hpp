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

#ifndef GRADER_ERROR_HPP
#define GRADER_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace grader {

/// Every failure the library reports is one of these codes. Callers branch on
/// the code; the message is for humans.
enum class ErrorCode {
  // prompt-forge
  kMissingRubric,
  kEmptyCorrectAnswer,
  kEmptyCourse,
  kTemplateError,
  kRubricCountMismatch,
  kRubricPointMismatch,
  kUnparsable,
  // llm-gateway
  kInvalidConfig,
  kTransportError,
  kProviderError,
  // grade-parser
  kOutOfRange,
  kDenominatorMismatch,
  // eval-engine
  kEmptyScores,
  kEmptySample,
  kMissingInstructorSample,
  kInvalidSample,
  // cli-report
  kSchemaError,
  kValidationError,
  kIoError,
  kWouldOverwrite,
  kConfigError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace grader

#endif  // GRADER_ERROR_HPP
