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

#include "grader/parse/grade_parser.hpp"

#include <cctype>
#include <cstdlib>
#include <optional>
#include <regex>

namespace grader {
namespace {

struct Token {
  std::size_t begin = 0;  // includes the sign
  std::size_t end = 0;
  std::string digits;     // unsigned text
  bool negative = false;
};

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

const std::regex& number_re() {
  static const std::regex re(R"(\d+(?:\.\d+)?)");
  return re;
}

const std::regex& slash_tail_re() {
  static const std::regex re(R"(^[ \t]*/[ \t]*(\d+(?:\.\d+)?))");
  return re;
}

const std::regex& label_re() {
  static const std::regex re(R"((?:^|[^A-Za-z])((?:grade|score)[ \t*_]*:[ \t*_]*)(-?)(\d+(?:\.\d+)?))",
                             std::regex::icase);
  return re;
}

const std::regex& slash_ahead_re() {
  static const std::regex re(R"(^[ \t]*/)");
  return re;
}

const std::regex& bare_re() {
  static const std::regex re(R"(^[ \t*_#>`]*(-?)(\d+(?:\.\d+)?))");
  return re;
}

// Left-boundary and sign handling shared by every rule.
std::optional<Token> make_token(std::string_view text, std::size_t digits_begin,
                                std::size_t digits_end) {
  Token t;
  t.begin = digits_begin;
  t.end = digits_end;
  t.digits = std::string(text.substr(digits_begin, digits_end - digits_begin));
  std::optional<char> before;
  if (digits_begin > 0) before = text[digits_begin - 1];
  if (before == '-' && (digits_begin < 2 || !is_alnum(text[digits_begin - 2]))) {
    t.negative = true;
    t.begin = digits_begin - 1;
    before = digits_begin >= 2 ? std::optional<char>(text[digits_begin - 2]) : std::nullopt;
  }
  if (before && (is_alnum(*before) || *before == '_' || *before == '.' || *before == ',')) {
    return std::nullopt;
  }
  return t;
}

bool bare_terminator_ok(const std::string& line, std::size_t pos) {
  if (pos >= line.size()) return true;
  char c = line[pos];
  return std::isspace(static_cast<unsigned char>(c)) != 0 || c == '.' || c == ',' || c == ';' ||
         c == ':' || c == ')' || c == '!';
}

int decimal_places(const std::string& digits) {
  auto dot = digits.find('.');
  return dot == std::string::npos ? 0 : static_cast<int>(digits.size() - dot - 1);
}

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

GradeParseResult finish(std::string_view text, const Token& tok, std::size_t cut_begin,
                        std::size_t cut_end, ExtractionRule rule, int max_points) {
  std::string raw(text);
  if (decimal_places(tok.digits) > 1) {
    return GradeParseError{ErrorCode::kUnparsable,
                           "score '" + tok.digits + "' has more than one decimal place", raw};
  }
  double value = std::strtod(tok.digits.c_str(), nullptr);
  if (tok.negative && value != 0.0) value = -value;
  if (value < 0.0 || value > static_cast<double>(max_points)) {
    std::string shown = (tok.negative ? "-" : "") + tok.digits;
    return GradeParseError{ErrorCode::kOutOfRange,
                           "score " + shown + " outside [0, " + std::to_string(max_points) + "]",
                           raw};
  }
  std::string rationale = raw.substr(0, cut_begin) + raw.substr(cut_end);
  return ParsedGrade{value, trim(std::move(rationale)), rule, raw};
}

}  // namespace

std::string_view to_string(ExtractionRule rule) {
  switch (rule) {
    case ExtractionRule::kSlashForm: return "slash";
    case ExtractionRule::kGradeLabelForm: return "label";
    case ExtractionRule::kBareLeadingNumber: return "bare";
  }
  return "";
}

GradeParseResult parse_grade(std::string_view text, int max_points) {
  if (max_points < 1) {
    return GradeParseError{ErrorCode::kOutOfRange, "max_points must be >= 1", std::string(text)};
  }
  const std::string s(text);

  // Rule 1.
  bool any_slash = false;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), number_re());
       it != std::sregex_iterator(); ++it) {
    auto tok = make_token(s, it->position(0), it->position(0) + it->length(0));
    if (!tok) continue;
    std::smatch tail;
    auto from = s.begin() + static_cast<std::ptrdiff_t>(tok->end);
    if (!std::regex_search(from, s.end(), tail, slash_tail_re(),
                           std::regex_constants::match_continuous)) {
      continue;
    }
    std::size_t y_end = tok->end + tail.position(0) + tail.length(0);
    if (y_end < s.size() && is_alnum(s[y_end])) continue;
    any_slash = true;
    if (std::strtod(tail[1].str().c_str(), nullptr) == static_cast<double>(max_points)) {
      return finish(s, *tok, tok->begin, y_end, ExtractionRule::kSlashForm, max_points);
    }
  }

  // Rule 2.
  for (auto it = std::sregex_iterator(s.begin(), s.end(), label_re());
       it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    std::size_t num_begin = m.position(3);
    std::size_t num_end = num_begin + m.length(3);
    std::smatch ahead;
    if (std::regex_search(s.begin() + static_cast<std::ptrdiff_t>(num_end), s.end(), ahead,
                          slash_ahead_re(), std::regex_constants::match_continuous)) {
      continue;
    }
    Token tok;
    tok.digits = m[3].str();
    tok.negative = m.length(2) > 0;
    tok.begin = m.position(2);
    tok.end = num_end;
    return finish(s, tok, m.position(1), num_end, ExtractionRule::kGradeLabelForm, max_points);
  }

  if (any_slash) {
    return GradeParseError{ErrorCode::kDenominatorMismatch,
                           "no X/" + std::to_string(max_points) + " score found", s};
  }

  // Rule 3.
  std::size_t line_begin = 0;
  while (line_begin < s.size()) {
    std::size_t line_end = s.find('\n', line_begin);
    if (line_end == std::string::npos) line_end = s.size();
    std::string line = s.substr(line_begin, line_end - line_begin);
    if (trim(line).empty()) {
      line_begin = line_end + 1;
      continue;
    }
    std::smatch m;
    if (std::regex_search(line, m, bare_re()) && bare_terminator_ok(line, m.position(2) + m.length(2))) {
      Token tok;
      tok.digits = m[2].str();
      tok.negative = m.length(1) > 0;
      tok.begin = line_begin + m.position(1);
      tok.end = line_begin + m.position(2) + m.length(2);
      return finish(s, tok, tok.begin, tok.end, ExtractionRule::kBareLeadingNumber, max_points);
    }
    break;
  }
  return GradeParseError{ErrorCode::kUnparsable, "no score found", s};
}

}  // namespace grader
