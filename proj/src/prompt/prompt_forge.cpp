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

#include "grader/prompt/prompt_forge.hpp"

#include <algorithm>
#include <cctype>

#include "grader/error.hpp"

namespace grader {
namespace {

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

std::string points_label(int points) {
  return std::to_string(points) + (points == 1 ? " point" : " points");
}

}  // namespace

PromptKind prompt_kind(Strategy s) {
  switch (s) {
    case Strategy::kAnswersOnly: return PromptKind::kAnswersOnly;
    case Strategy::kAnswersAndInstructorRubric: return PromptKind::kAnswersAndInstructorRubric;
    case Strategy::kAnswersAndLlmRubric: return PromptKind::kAnswersAndLlmRubric;
  }
  return PromptKind::kAnswersOnly;
}

std::string_view to_string(PromptKind kind) {
  switch (kind) {
    case PromptKind::kAnswersOnly: return "answers";
    case PromptKind::kAnswersAndInstructorRubric: return "answers+rubric";
    case PromptKind::kAnswersAndLlmRubric: return "answers+llm-rubric";
    case PromptKind::kRubricGeneration: return "rubric-generation";
  }
  return "";
}

std::string render_rubric(const Rubric& rubric) {
  std::string out;
  for (std::size_t i = 0; i < rubric.items.size(); ++i) {
    const auto& item = rubric.items[i];
    if (i > 0) out += "\n\n";
    out += item.criterion;
    for (const auto& opt : item.options) {
      out += "\n\n";
      out += points_label(opt.points);
      out += ": ";
      out += opt.descriptor;
    }
  }
  return out;
}

std::string score_breakdown(const Course& course) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < course.questions.size(); ++i) {
    parts.push_back("the score for Question " + std::to_string(i + 1) + " is " +
                    std::to_string(course.questions[i].max_points));
  }
  if (parts.size() == 1) return parts[0];
  if (parts.size() == 2) return parts[0] + " and " + parts[1];
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ", ";
    if (i + 1 == parts.size()) out += "and ";
    out += parts[i];
  }
  return out;
}

RenderedPrompt build_grading_prompt(Strategy strategy, const Question& question,
                                    std::size_t question_number,
                                    const std::optional<Rubric>& rubric,
                                    const Submission& submission,
                                    const TemplateSet& templates) {
  if (blank(question.correct_answer)) {
    throw Error(ErrorCode::kEmptyCorrectAnswer, "question '" + question.id + "'");
  }
  if (requires_rubric(strategy)) {
    if (!rubric) {
      throw Error(ErrorCode::kMissingRubric, "strategy " + std::string(to_cli_name(strategy)) +
                                                 " needs a rubric for question '" +
                                                 question.id + "'");
    }
    if (strategy == Strategy::kAnswersAndLlmRubric &&
        rubric->source != RubricSource::kLlmGenerated) {
      throw Error(ErrorCode::kMissingRubric,
                  "question '" + question.id + "' has no LLM-generated rubric");
    }
  }

  std::map<std::string, std::string, std::less<>> values{
      {"question_number", std::to_string(question_number)},
      {"question_text", question.text},
      {"correct_answer", question.correct_answer},
      {"max_points", std::to_string(question.max_points)},
      {"student_answer", submission.answer_text},
  };
  RenderedPrompt out;
  out.kind = prompt_kind(strategy);
  out.question_id = question.id;
  out.student_id = submission.student_id;
  out.template_version = templates.version;
  if (strategy == Strategy::kAnswersOnly) {
    values["instruction"] = templates.instruction_answers;
    out.text = templates.grading_answers.render(values);
  } else {
    values["instruction"] = templates.instruction_answers_rubric;
    values["rubric"] = render_rubric(*rubric);
    out.text = templates.grading_answers_rubric.render(values);
  }
  return out;
}

RenderedPrompt build_grading_prompt(Strategy strategy, const Course& course,
                                    const Question& question,
                                    const std::optional<Rubric>& rubric,
                                    const Submission& submission,
                                    const TemplateSet& templates) {
  return build_grading_prompt(strategy, question, course.question_number(question.id), rubric,
                              submission, templates);
}

RenderedPrompt build_rubric_generation_prompt(const Course& course,
                                              const std::string& audience_line,
                                              const TemplateSet& templates) {
  if (course.questions.empty()) {
    throw Error(ErrorCode::kEmptyCourse, "course '" + course.id + "' has no questions");
  }
  std::string blocks;
  for (std::size_t i = 0; i < course.questions.size(); ++i) {
    const auto& q = course.questions[i];
    if (blank(q.correct_answer)) {
      throw Error(ErrorCode::kEmptyCorrectAnswer, "question '" + q.id + "'");
    }
    if (i > 0) blocks += "\n\n";
    blocks += templates.rubric_question_block.render({
        {"question_number", std::to_string(i + 1)},
        {"question_text", q.text},
        {"correct_answer", q.correct_answer},
        {"max_points", std::to_string(q.max_points)},
    });
  }
  RenderedPrompt out;
  out.kind = PromptKind::kRubricGeneration;
  out.template_version = templates.version;
  out.text = templates.rubric_generation.render({
      {"course_name", course.name},
      {"audience_line", audience_line},
      {"score_breakdown", score_breakdown(course)},
      {"questions_answers", blocks},
  });
  return out;
}

}  // namespace grader
