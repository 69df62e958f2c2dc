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

#ifndef GRADER_PROMPT_RUBRIC_PARSER_HPP
#define GRADER_PROMPT_RUBRIC_PARSER_HPP

#include <string_view>
#include <vector>

#include "grader/core/model.hpp"

namespace grader {

/// Splits a rubric-generation response into one Rubric per course question.
///
/// Sections start at lines reading "Rubric for Question N" (any case, markdown
/// emphasis, heading marks and a trailing colon are ignored). Within a section
/// two item layouts are understood, and may be mixed:
///
///   - Criterion name (2 points): what earns the points
///
///   Criterion text
///   2 points: descriptor
///   1 point: descriptor
///
/// Errors: Unparsable (empty response, no items, option without criterion),
/// RubricCountMismatch (headers do not number 1..questions exactly once),
/// RubricPointMismatch (non-whole points, or best-case sum != max_points).
/// Returned rubrics are in course order and marked LLM-generated.
std::vector<Rubric> parse_generated_rubrics(std::string_view response_text, const Course& course);

}  // namespace grader

#endif  // GRADER_PROMPT_RUBRIC_PARSER_HPP
