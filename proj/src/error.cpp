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

#include "grader/error.hpp"

namespace grader {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingRubric: return "MissingRubric";
    case ErrorCode::kEmptyCorrectAnswer: return "EmptyCorrectAnswer";
    case ErrorCode::kEmptyCourse: return "EmptyCourse";
    case ErrorCode::kTemplateError: return "TemplateError";
    case ErrorCode::kRubricCountMismatch: return "RubricCountMismatch";
    case ErrorCode::kRubricPointMismatch: return "RubricPointMismatch";
    case ErrorCode::kUnparsable: return "Unparsable";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kTransportError: return "TransportError";
    case ErrorCode::kProviderError: return "ProviderError";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kDenominatorMismatch: return "DenominatorMismatch";
    case ErrorCode::kEmptyScores: return "EmptyScores";
    case ErrorCode::kEmptySample: return "EmptySample";
    case ErrorCode::kMissingInstructorSample: return "MissingInstructorSample";
    case ErrorCode::kInvalidSample: return "InvalidSample";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kWouldOverwrite: return "WouldOverwrite";
    case ErrorCode::kConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace grader
