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

// mooc-grader: grade course submissions with a chat model and compare the
// grades against instructor and peer grading.

#include <iostream>

#include <CLI11.hpp>

#include "grader/app/commands.hpp"

namespace {

void add_common(CLI::App* cmd, grader::CommonOptions& common) {
  cmd->add_option("--course", common.course_dir,
                  "bundle directory with course.json, submissions.jsonl, grades.jsonl")
      ->required();
  cmd->add_option("--workdir", common.workdir, "output directory (default <course>/work)");
  cmd->add_option("--config", common.config_file, "JSON config file");
}

void add_backend(CLI::App* cmd, grader::BackendOptions& backend) {
  cmd->add_option("--mock", backend.mock_script, "answer from a mock script instead of the API")
      ->check(CLI::ExistingFile);
  cmd->add_option("--endpoint", backend.endpoint, "chat-completions URL");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grade open-ended course assignments with a chat model"};
  app.require_subcommand(1);

  grader::CommonOptions check_opts;
  auto* check = app.add_subcommand("ingest-check", "validate a course bundle");
  add_common(check, check_opts);

  grader::GenRubricOptions rubric_opts;
  auto* gen = app.add_subcommand("gen-rubric", "ask a model to write one rubric per question");
  add_common(gen, rubric_opts.common);
  add_backend(gen, rubric_opts.backend);
  gen->add_option("--rubric-model", rubric_opts.rubric_model, "model id (default gpt-4-0613)");
  gen->add_flag("--force", rubric_opts.force, "replace existing rubrics");

  grader::GradeOptions grade_opts;
  std::string strategy_name;
  auto* grade = app.add_subcommand("grade", "grade every submission with one strategy");
  add_common(grade, grade_opts.common);
  add_backend(grade, grade_opts.backend);
  grade->add_option("--strategy", strategy_name, "grading strategy")
      ->required()
      ->check(CLI::IsMember({"answers", "answers+rubric", "answers+llm-rubric"}));
  grade->add_option("--model", grade_opts.model, "model id (default gpt-4-0613)");
  grade->add_option("--parallel", grade_opts.parallel, "concurrent model calls")
      ->check(CLI::PositiveNumber);
  grade->add_flag("--force", grade_opts.force, "replace an existing ledger");

  grader::EvaluateOptions eval_opts;
  auto* evaluate = app.add_subcommand("evaluate", "average, bootstrap and compare grade sources");
  add_common(evaluate, eval_opts.common);
  evaluate->add_option("--source", eval_opts.sources,
                       "source key to include, repeatable (default: all)");
  evaluate->add_option("--resamples", eval_opts.resamples, "bootstrap resamples (default 10000)")
      ->check(CLI::PositiveNumber);
  evaluate->add_option("--seed", eval_opts.seed, "master seed (default 0)");

  grader::CommonOptions report_opts;
  auto* report = app.add_subcommand("report", "print tables from the last evaluation");
  add_common(report, report_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : grader::kExitUsage;
  }

  if (*check) return grader::cmd_ingest_check(check_opts, std::cout, std::cerr);
  if (*gen) return grader::cmd_gen_rubric(rubric_opts, std::cout, std::cerr);
  if (*grade) {
    grade_opts.strategy = *grader::strategy_from_cli_name(strategy_name);
    return grader::cmd_grade(grade_opts, std::cout, std::cerr);
  }
  if (*evaluate) return grader::cmd_evaluate(eval_opts, std::cout, std::cerr);
  if (*report) return grader::cmd_report(report_opts, std::cout, std::cerr);
  return grader::kExitUsage;
}
