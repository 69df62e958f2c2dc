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

#ifndef GRADER_PARSE_GRADE_PARSER_HPP
#define GRADER_PARSE_GRADE_PARSER_HPP

#include <string>
#include <string_view>
#include <variant>

#include "grader/error.hpp"

namespace grader {

enum class ExtractionRule { kSlashForm, kGradeLabelForm, kBareLeadingNumber };

std::string_view to_string(ExtractionRule rule);

struct ParsedGrade {
  double score = 0.0;
  /// The response with the matched score token removed, trimmed.
  std::string rationale;
  ExtractionRule rule = ExtractionRule::kSlashForm;
  std::string raw_response;
};

struct GradeParseError {
  ErrorCode code = ErrorCode::kUnparsable;  // Unparsable, OutOfRange, DenominatorMismatch
  std::string message;
  std::string raw_response;
};

using GradeParseResult = std::variant<ParsedGrade, GradeParseError>;

/// Extracts a score from a free-text grading response.
///
/// A number token is a maximal run of digits with an optional ".digits"
/// fraction. It is only a token when the character before it is not a letter,
/// digit, '_', '.', or ','. A '-' directly in front counts as a sign when
/// nothing alphanumeric precedes it. Rules, first hit wins:
///
///  1. Slash: the first token X followed by optional blanks, '/', optional
///     blanks and a token Y == max_points (Y not followed by a letter/digit).
///  2. Label: the first "grade" or "score" (any case, no letter before it),
///     then blanks/'*'/'_', ':', blanks/'*'/'_', and a token X that is not
///     itself the numerator of a slash.
///  3. Bare: the first non-empty line, after leading blanks and markdown
///     marks, starts with a token X followed by end of line, whitespace or one
///     of ".,;:)!".
///
/// If slash forms exist but none has Y == max_points and rule 2 misses, the
/// result is DenominatorMismatch (rule 3 is not tried). X with more than one
/// decimal place is Unparsable; X outside [0, max_points] is OutOfRange.
/// Never clamps.
GradeParseResult parse_grade(std::string_view response_text, int max_points);

inline bool is_parsed(const GradeParseResult& r) {
  return std::holds_alternative<ParsedGrade>(r);
}

}  // namespace grader

#endif  // GRADER_PARSE_GRADE_PARSER_HPP
