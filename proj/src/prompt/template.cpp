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

#include "grader/prompt/template.hpp"

#include <fstream>
#include <sstream>

#include "builtin_templates.hpp"
#include "grader/error.hpp"

namespace grader {
namespace {

bool is_name_char(char c) { return (c >= 'a' && c <= 'z') || c == '_'; }

std::string strip_one_newline(std::string s) {
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read template " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TemplateSet make_set(std::string version, std::string_view instruction_answers,
                     std::string_view instruction_answers_rubric,
                     std::string_view grading_answers, std::string_view grading_answers_rubric,
                     std::string_view rubric_generation, std::string_view rubric_question_block) {
  TemplateSet set;
  set.version = std::move(version);
  set.instruction_answers = strip_one_newline(std::string(instruction_answers));
  set.instruction_answers_rubric = strip_one_newline(std::string(instruction_answers_rubric));
  set.grading_answers =
      Template::parse(strip_one_newline(std::string(grading_answers)), "grading_answers");
  set.grading_answers_rubric = Template::parse(
      strip_one_newline(std::string(grading_answers_rubric)), "grading_answers_rubric");
  set.rubric_generation =
      Template::parse(strip_one_newline(std::string(rubric_generation)), "rubric_generation");
  set.rubric_question_block = Template::parse(
      strip_one_newline(std::string(rubric_question_block)), "rubric_question_block");
  return set;
}

}  // namespace

Template Template::parse(std::string_view text, std::string name) {
  Template t;
  t.name_ = std::move(name);
  std::string literal;
  auto flush = [&] {
    if (!literal.empty()) t.pieces_.push_back({false, std::move(literal)});
    literal.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '{') {
      if (i + 1 < text.size() && text[i + 1] == '{') {
        literal += '{';
        ++i;
        continue;
      }
      std::size_t j = i + 1;
      while (j < text.size() && is_name_char(text[j])) ++j;
      if (j == i + 1 || j >= text.size() || text[j] != '}') {
        throw Error(ErrorCode::kTemplateError,
                    t.name_ + ": stray '{' at offset " + std::to_string(i));
      }
      flush();
      std::string key(text.substr(i + 1, j - i - 1));
      t.placeholders_.insert(key);
      t.pieces_.push_back({true, std::move(key)});
      i = j;
    } else if (c == '}') {
      if (i + 1 < text.size() && text[i + 1] == '}') {
        literal += '}';
        ++i;
        continue;
      }
      throw Error(ErrorCode::kTemplateError,
                  t.name_ + ": stray '}' at offset " + std::to_string(i));
    } else {
      literal += c;
    }
  }
  flush();
  return t;
}

std::string Template::render(const std::map<std::string, std::string, std::less<>>& values) const {
  std::string out;
  for (const auto& piece : pieces_) {
    if (!piece.is_placeholder) {
      out += piece.text;
      continue;
    }
    auto it = values.find(piece.text);
    if (it == values.end()) {
      throw Error(ErrorCode::kTemplateError,
                  name_ + ": no value for placeholder {" + piece.text + "}");
    }
    out += it->second;
  }
  return out;
}

const TemplateSet& TemplateSet::builtin() {
  static const TemplateSet set = make_set(
      std::string(builtin_templates::kVersion), builtin_templates::kInstructionAnswers,
      builtin_templates::kInstructionAnswersRubric, builtin_templates::kGradingAnswers,
      builtin_templates::kGradingAnswersRubric, builtin_templates::kRubricGeneration,
      builtin_templates::kRubricQuestionBlock);
  return set;
}

TemplateSet TemplateSet::load(const std::filesystem::path& dir, std::string version) {
  return make_set(std::move(version), read_file(dir / "instruction_answers.txt"),
                  read_file(dir / "instruction_answers_rubric.txt"),
                  read_file(dir / "grading_answers.txt"),
                  read_file(dir / "grading_answers_rubric.txt"),
                  read_file(dir / "rubric_generation.txt"),
                  read_file(dir / "rubric_question_block.txt"));
}

}  // namespace grader
