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

#ifndef GRADER_PROMPT_PROMPT_FORGE_HPP
#define GRADER_PROMPT_PROMPT_FORGE_HPP

#include <optional>
#include <string>

#include "grader/core/model.hpp"
#include "grader/prompt/template.hpp"

namespace grader {

enum class PromptKind {
  kAnswersOnly,
  kAnswersAndInstructorRubric,
  kAnswersAndLlmRubric,
  kRubricGeneration,
};

PromptKind prompt_kind(Strategy s);
std::string_view to_string(PromptKind kind);

struct RenderedPrompt {
  std::string text;
  PromptKind kind = PromptKind::kAnswersOnly;
  std::optional<std::string> question_id;  // absent for rubric generation
  std::optional<std::string> student_id;   // absent for rubric generation
  std::string template_version;
};

/// Renders one grading prompt for one student and one question. Nothing from
/// other submissions or questions enters the text.
///
/// Throws MissingRubric when `strategy` needs a rubric and none is given, or
/// when AnswersAndLlmRubric gets a rubric not marked LLM-generated. Throws
/// EmptyCorrectAnswer when the question has no model answer.
RenderedPrompt build_grading_prompt(Strategy strategy, const Question& question,
                                    std::size_t question_number,
                                    const std::optional<Rubric>& rubric,
                                    const Submission& submission,
                                    const TemplateSet& templates = TemplateSet::builtin());

/// Convenience overload that looks up the question number in `course`.
RenderedPrompt build_grading_prompt(Strategy strategy, const Course& course,
                                    const Question& question,
                                    const std::optional<Rubric>& rubric,
                                    const Submission& submission,
                                    const TemplateSet& templates = TemplateSet::builtin());

/// The course-wide prompt that asks a model to write one rubric per question.
/// Throws EmptyCourse for a course without questions, EmptyCorrectAnswer when
/// a question lacks a model answer.
RenderedPrompt build_rubric_generation_prompt(const Course& course,
                                              const std::string& audience_line,
                                              const TemplateSet& templates = TemplateSet::builtin());

/// Text that stands in for {rubric}: each criterion followed by its point
/// options as "N points: descriptor" lines.
std::string render_rubric(const Rubric& rubric);

/// "the score for Question 1 is 10, the score for Question 2 is 10, and ..."
std::string score_breakdown(const Course& course);

}  // namespace grader

#endif  // GRADER_PROMPT_PROMPT_FORGE_HPP
