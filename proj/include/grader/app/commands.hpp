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

#ifndef GRADER_APP_COMMANDS_HPP
#define GRADER_APP_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grader/core/model.hpp"
#include "grader/llm/backend.hpp"
#include "grader/llm/config.hpp"
#include "grader/llm/gateway.hpp"

namespace grader {

/// Process exit codes of the CLI.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,           // bad flags, config, missing rubric, missing API key
  kExitIngest = 2,          // schema or validation error in the course bundle
  kExitParseFailures = 3,   // unparsable grades or rubrics
  kExitWouldOverwrite = 4,  // output exists and --force was not given
  kExitGateway = 5,         // model calls failed after retries
  kExitEvalData = 6,        // missing sources, missing instructor grades
};

/// Exit code for an error raised while running a command.
int exit_code_for(ErrorCode code);

/// Settings after merging the optional JSON config file over the defaults:
///
///   {"grader": {LlmConfig keys}, "rubric_generator": {LlmConfig keys},
///    "resamples": 10000, "seed": 0, "parallel": 1}
struct AppConfig {
  LlmConfig grader;
  LlmConfig rubric_generator;
  int resamples = 10000;
  std::uint64_t seed = 0;
  int parallel = 1;
};

AppConfig load_app_config(const std::optional<std::filesystem::path>& file);

struct CommonOptions {
  /// Bundle directory with course.json, submissions.jsonl, grades.jsonl.
  std::filesystem::path course_dir;
  /// Defaults to <course_dir>/work.
  std::optional<std::filesystem::path> workdir;
  std::optional<std::filesystem::path> config_file;

  std::filesystem::path resolved_workdir() const;
};

struct BackendOptions {
  std::optional<std::filesystem::path> mock_script;
  std::optional<std::string> endpoint;
  /// Takes precedence over mock_script and the HTTP backend when set.
  std::shared_ptr<Backend> backend;
  std::optional<Gateway::Hooks> hooks;
};

struct GenRubricOptions {
  CommonOptions common;
  BackendOptions backend;
  std::optional<std::string> rubric_model;
  bool force = false;
};

struct GradeOptions {
  CommonOptions common;
  BackendOptions backend;
  Strategy strategy = Strategy::kAnswersOnly;
  std::optional<std::string> model;
  std::optional<int> parallel;
  bool force = false;
};

struct EvaluateOptions {
  CommonOptions common;
  /// Source keys ("peer", "gpt-4-0613/answers", ...); empty means every
  /// source with records. The instructor is always included.
  std::vector<std::string> sources;
  std::optional<int> resamples;
  std::optional<std::uint64_t> seed;
};

/// Each command prints progress to `out`, diagnostics to `err`, and returns
/// an ExitCode.
int cmd_ingest_check(const CommonOptions& options, std::ostream& out, std::ostream& err);
int cmd_gen_rubric(const GenRubricOptions& options, std::ostream& out, std::ostream& err);
int cmd_grade(const GradeOptions& options, std::ostream& out, std::ostream& err);
int cmd_evaluate(const EvaluateOptions& options, std::ostream& out, std::ostream& err);
/// Prints the tables from the ledgers and the last evaluate's summaries.csv.
int cmd_report(const CommonOptions& options, std::ostream& out, std::ostream& err);

}  // namespace grader

#endif  // GRADER_APP_COMMANDS_HPP
