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

#ifndef GRADER_PROMPT_TEMPLATE_HPP
#define GRADER_PROMPT_TEMPLATE_HPP

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace grader {

/// A prompt template with named placeholders.
///
/// Syntax:
///   {name}   placeholder, name is [a-z_]+
///   {{ }}    literal braces
/// Any other brace is a TemplateError at parse time. Substituted values are
/// inserted verbatim and never rescanned, so answer text containing braces is
/// safe.
class Template {
 public:
  Template() = default;
  static Template parse(std::string_view text, std::string name);

  /// Throws TemplateError when a placeholder has no value. Extra values are
  /// ignored.
  std::string render(const std::map<std::string, std::string, std::less<>>& values) const;

  const std::string& name() const { return name_; }
  const std::set<std::string, std::less<>>& placeholders() const { return placeholders_; }

 private:
  struct Piece {
    bool is_placeholder = false;
    std::string text;  // literal text or placeholder name
  };

  std::string name_;
  std::vector<Piece> pieces_;
  std::set<std::string, std::less<>> placeholders_;
};

/// One versioned set of prompt templates. The shipped set lives in
/// templates/<version>/ and is compiled into the library.
struct TemplateSet {
  std::string version;
  std::string instruction_answers;
  std::string instruction_answers_rubric;
  Template grading_answers;
  Template grading_answers_rubric;
  Template rubric_generation;
  Template rubric_question_block;

  static const TemplateSet& builtin();

  /// Loads the same file names from `dir`. Each file loses exactly one
  /// trailing newline, if present.
  static TemplateSet load(const std::filesystem::path& dir, std::string version);
};

}  // namespace grader

#endif  // GRADER_PROMPT_TEMPLATE_HPP
