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

#include "grader/prompt/rubric_parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <regex>
#include <string>

#include "grader/core/validate.hpp"
#include "grader/error.hpp"

namespace grader {
namespace {

const std::regex& header_re() {
  static const std::regex re(R"(^rubric\s+for\s+question\s+(\d+)\b)", std::regex::icase);
  return re;
}

const std::regex& bullet_re() {
  static const std::regex re(R"(^(?:[-*+•]|\d{1,2}[.)]|[a-z][)])\s+)", std::regex::icase);
  return re;
}

const std::regex& option_re() {
  static const std::regex re(R"(^\(?(\d+(?:\.\d+)?)\)?\s*(?:points?|pts?)\s*\)?\s*[:\-]\s*(.*)$)",
                             std::regex::icase);
  return re;
}

const std::regex& inline_item_re() {
  static const std::regex re(
      R"(^(.+?)\s*\(\s*(\d+(?:\.\d+)?)\s*(?:points?|pts?)\s*\)\s*[:\-]?\s*(.*)$)",
      std::regex::icase);
  return re;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// Drops markdown emphasis and heading marks.
std::string strip_markup(std::string_view line) {
  std::string out;
  out.reserve(line.size());
  for (char c : line) {
    if (c == '*' || c == '#' || c == '`') continue;
    out += c;
  }
  // Underscore emphasis only at the edges; inner underscores may be content.
  std::string t = trim(out);
  while (!t.empty() && t.front() == '_') t.erase(t.begin());
  while (!t.empty() && t.back() == '_') t.pop_back();
  return trim(t);
}

std::optional<int> header_number(std::string_view line) {
  std::string cleaned = strip_markup(line);
  while (!cleaned.empty() && (cleaned.front() == '>' || cleaned.front() == '-')) {
    cleaned = trim(cleaned.substr(1));
  }
  std::smatch m;
  if (!std::regex_search(cleaned, m, header_re())) return std::nullopt;
  return std::stoi(m[1].str());
}

int whole_points(const std::string& token, std::string_view where) {
  double value = std::stod(token);
  if (value != static_cast<double>(static_cast<long long>(value))) {
    throw Error(ErrorCode::kRubricPointMismatch,
                std::string(where) + ": non-whole point value " + token);
  }
  return static_cast<int>(value);
}

struct Section {
  int number = 0;
  std::vector<std::string> lines;
};

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.emplace_back(text.substr(start));
      break;
    }
    lines.emplace_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

bool starts_block(const std::string& cleaned) {
  std::smatch m;
  return std::regex_search(cleaned, m, bullet_re()) || std::regex_search(cleaned, m, option_re()) ||
         std::regex_search(cleaned, m, inline_item_re());
}

// Groups a section's lines into logical blocks: a blank line, a bullet, or a
// line that is itself an option or inline item starts a new block; anything
// else continues the previous one.
std::vector<std::string> blocks_of(const std::vector<std::string>& lines) {
  std::vector<std::string> blocks;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) blocks.push_back(current);
    current.clear();
  };
  for (const auto& raw : lines) {
    std::string cleaned = strip_markup(raw);
    if (cleaned.empty()) {
      flush();
      continue;
    }
    if (current.empty() || starts_block(cleaned)) {
      flush();
      current = cleaned;
    } else {
      current += ' ';
      current += cleaned;
    }
  }
  flush();
  for (auto& b : blocks) b = trim(std::regex_replace(b, bullet_re(), "", std::regex_constants::format_first_only));
  return blocks;
}

Rubric parse_section(const Section& section, const Question& question) {
  const std::string where = "Rubric for Question " + std::to_string(section.number);
  Rubric rubric;
  rubric.question_id = question.id;
  rubric.source = RubricSource::kLlmGenerated;

  std::optional<std::string> pending_criterion;
  std::optional<std::size_t> current;
  // Declared "(N points)" of an inline item that had no descriptor; used only
  // when no explicit options follow.
  std::map<std::size_t, int> declared;

  for (const auto& block : blocks_of(section.lines)) {
    std::smatch m;
    if (std::regex_match(block, m, option_re())) {
      RubricOption opt{whole_points(m[1].str(), where), trim(m[2].str())};
      if (!current) {
        if (!pending_criterion) {
          throw Error(ErrorCode::kUnparsable,
                      where + ": point option without a criterion: '" + block + "'");
        }
        rubric.items.push_back({*pending_criterion, {}});
        pending_criterion.reset();
        current = rubric.items.size() - 1;
      }
      rubric.items[*current].options.push_back(std::move(opt));
    } else if (std::regex_match(block, m, inline_item_re()) &&
               !lower(trim(m[1].str())).starts_with("total")) {
      pending_criterion.reset();
      int points = whole_points(m[2].str(), where);
      RubricItem item{trim(m[1].str()), {}};
      std::string descriptor = trim(m[3].str());
      if (!descriptor.empty()) item.options.push_back({points, descriptor});
      rubric.items.push_back(std::move(item));
      current = rubric.items.size() - 1;
      if (descriptor.empty()) declared[*current] = points;
    } else {
      // Free text: a criterion if options follow, otherwise commentary.
      pending_criterion = block;
      current.reset();
    }
  }
  for (auto [index, points] : declared) {
    if (rubric.items[index].options.empty()) rubric.items[index].options.push_back({points, ""});
  }
  if (rubric.items.empty()) {
    throw Error(ErrorCode::kUnparsable, where + ": no rubric items found");
  }
  int sum = rubric.max_attainable();
  if (sum != question.max_points) {
    throw Error(ErrorCode::kRubricPointMismatch,
                where + ": max sum " + std::to_string(sum) + " ≠ max_points " +
                    std::to_string(question.max_points));
  }
  auto findings = validate_rubric(rubric, question, where);
  if (!findings.empty()) {
    throw Error(ErrorCode::kRubricPointMismatch, findings.front().to_string());
  }
  return rubric;
}

}  // namespace

std::vector<Rubric> parse_generated_rubrics(std::string_view response_text, const Course& course) {
  if (trim(response_text).empty()) {
    throw Error(ErrorCode::kUnparsable, "empty rubric response");
  }
  std::vector<Section> sections;
  for (auto& line : split_lines(response_text)) {
    if (auto n = header_number(line)) {
      sections.push_back({*n, {}});
    } else if (!sections.empty()) {
      sections.back().lines.push_back(std::move(line));
    }
  }
  const std::size_t expected = course.questions.size();
  if (sections.size() != expected) {
    throw Error(ErrorCode::kRubricCountMismatch,
                "found " + std::to_string(sections.size()) + " rubric headers for " +
                    std::to_string(expected) + " questions");
  }
  std::vector<std::optional<Rubric>> by_question(expected);
  for (const auto& section : sections) {
    if (section.number < 1 || static_cast<std::size_t>(section.number) > expected ||
        by_question[section.number - 1]) {
      throw Error(ErrorCode::kRubricCountMismatch,
                  "rubric headers must number questions 1.." + std::to_string(expected) +
                      " once each; saw Question " + std::to_string(section.number));
    }
    by_question[section.number - 1] =
        parse_section(section, course.questions[section.number - 1]);
  }
  std::vector<Rubric> out;
  out.reserve(expected);
  for (auto& r : by_question) out.push_back(std::move(*r));
  return out;
}

}  // namespace grader
