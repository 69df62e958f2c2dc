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

#include "grader/app/commands.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "grader/app/corpus.hpp"
#include "grader/app/report.hpp"
#include "grader/app/workspace.hpp"
#include "grader/core/hash.hpp"
#include "grader/core/json_io.hpp"
#include "grader/error.hpp"
#include "grader/eval/alignment.hpp"
#include "grader/eval/bootstrap.hpp"
#include "grader/eval/format.hpp"
#include "grader/eval/rng.hpp"
#include "grader/eval/samples.hpp"
#include "grader/llm/http_backend.hpp"
#include "grader/llm/mock_backend.hpp"
#include "grader/llm/run_log.hpp"
#include "grader/parse/grade_parser.hpp"
#include "grader/prompt/prompt_forge.hpp"
#include "grader/prompt/rubric_parser.hpp"

namespace grader {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

std::shared_ptr<Backend> make_backend(const BackendOptions& options, const LlmConfig& config) {
  if (options.backend) return options.backend;
  if (options.mock_script) return MockBackend::from_file(*options.mock_script);
  return std::make_shared<HttpBackend>(config.endpoint, HttpBackend::api_key_from_env(),
                                       config.timeout);
}

Gateway make_gateway(const BackendOptions& options, const LlmConfig& config) {
  auto backend = make_backend(options, config);
  if (options.hooks) return Gateway(config, std::move(backend), *options.hooks);
  return Gateway(config, std::move(backend));
}

std::string run_id_for(std::initializer_list<std::string_view> parts) {
  std::uint64_t h = fnv1a64("");
  for (auto p : parts) {
    h = fnv1a64(p, h);
    h = fnv1a64("\x1f", h);
  }
  return "run-" + to_hex64(h);
}

std::string submissions_digest(const Corpus& corpus) {
  std::string all;
  for (const auto& s : corpus.submissions) all += json(s).dump() + "\n";
  return to_hex64(fnv1a64(all));
}

// Starts a fresh run directory; a rerun with the same id replaces its log.
fs::path prepare_run_dir(const Workspace& ws, const std::string& run_id) {
  const auto dir = ws.run_dir(run_id);
  fs::create_directories(dir);
  fs::remove(dir / "completions.jsonl");
  return dir;
}

void write_manifest(const fs::path& run_dir, const json& manifest) {
  write_file_atomically(run_dir / "manifest.json", manifest.dump(2) + "\n");
}

struct ItemResult {
  CompletionRecord completion;
  std::optional<GradeRecord> record;
  std::optional<ReviewEntry> review;
  bool gateway_failure = false;
  std::exception_ptr failure;
};

std::vector<GradeRecord> load_records(const Corpus& corpus, const Workspace& ws) {
  std::vector<GradeRecord> records = corpus.human_grades;
  auto llm = ws.load_all_ledgers();
  records.insert(records.end(), llm.begin(), llm.end());
  return records;
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSchemaError:
    case ErrorCode::kValidationError:
    case ErrorCode::kEmptyCourse:
    case ErrorCode::kEmptyCorrectAnswer:
      return kExitIngest;
    case ErrorCode::kUnparsable:
    case ErrorCode::kOutOfRange:
    case ErrorCode::kDenominatorMismatch:
    case ErrorCode::kRubricCountMismatch:
    case ErrorCode::kRubricPointMismatch:
      return kExitParseFailures;
    case ErrorCode::kWouldOverwrite:
      return kExitWouldOverwrite;
    case ErrorCode::kTransportError:
    case ErrorCode::kProviderError:
      return kExitGateway;
    case ErrorCode::kEmptyScores:
    case ErrorCode::kEmptySample:
    case ErrorCode::kMissingInstructorSample:
    case ErrorCode::kInvalidSample:
      return kExitEvalData;
    default:
      return kExitUsage;
  }
}

AppConfig load_app_config(const std::optional<fs::path>& file) {
  AppConfig config;
  config.rubric_generator.model_id = kDefaultRubricModel;
  if (!file) return config;
  json j;
  try {
    j = json::parse(read_file(*file));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfigError, file->string() + ": " + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::kConfigError, file->string() + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "grader") {
        apply_json(value, config.grader);
      } else if (key == "rubric_generator") {
        apply_json(value, config.rubric_generator);
      } else if (key == "resamples") {
        config.resamples = value.get<int>();
      } else if (key == "seed") {
        config.seed = value.get<std::uint64_t>();
      } else if (key == "parallel") {
        config.parallel = value.get<int>();
      } else {
        throw Error(ErrorCode::kConfigError, "unknown config key '" + key + "'");
      }
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kConfigError, file->string() + ": '" + key + "': " + e.what());
    } catch (const Error& e) {
      throw Error(e.code(), file->string() + ": " + e.detail());
    }
  }
  return config;
}

fs::path CommonOptions::resolved_workdir() const {
  return workdir ? *workdir : course_dir / "work";
}

int cmd_ingest_check(const CommonOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto corpus = ingest(BundlePaths::in(options.course_dir));
    std::size_t instructor = 0, peer_raw = 0, empty = 0;
    for (const auto& r : corpus.human_grades) {
      if (r.source.kind == GradeSource::Kind::kInstructor) ++instructor;
      if (r.source.kind == GradeSource::Kind::kPeerRaw) ++peer_raw;
    }
    for (const auto& s : corpus.submissions) empty += s.is_empty() ? 1 : 0;
    out << "course " << corpus.course.id << ": " << corpus.course.questions.size()
        << " questions, " << corpus.students().size() << " students, "
        << corpus.submissions.size() << " submissions (" << empty << " empty), " << instructor
        << " instructor grades, " << peer_raw << " peer grades\n";
    return kExitOk;
  });
}

int cmd_gen_rubric(const GenRubricOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const auto corpus = ingest(BundlePaths::in(options.common.course_dir));
    auto config = load_app_config(options.common.config_file);
    LlmConfig llm = config.rubric_generator;
    if (options.rubric_model) llm.model_id = *options.rubric_model;
    if (options.backend.endpoint) llm.endpoint = *options.backend.endpoint;
    llm.validate();

    Workspace ws(options.common.resolved_workdir());
    if (fs::exists(ws.rubrics_file()) && !options.force) {
      throw Error(ErrorCode::kWouldOverwrite,
                  ws.rubrics_file().string() + " exists; pass --force to regenerate");
    }
    const auto prompt = build_rubric_generation_prompt(corpus.course, corpus.audience_line);
    const auto run_id = run_id_for({"gen-rubric", json(corpus.course).dump(), corpus.audience_line,
                                    llm.model_id, prompt.template_version});
    auto gateway = make_gateway(options.backend, llm);
    const auto run_dir = prepare_run_dir(ws, run_id);
    RunLog log(run_dir / "completions.jsonl");
    const auto started = utc_timestamp_now();

    json manifest{{"run_id", run_id},
                  {"command", "gen-rubric"},
                  {"course_id", corpus.course.id},
                  {"model_ids", {llm.model_id}},
                  {"template_version", prompt.template_version},
                  {"config", to_json_value(llm)},
                  {"started_at", started}};
    auto finish = [&](const std::string& status) {
      manifest["finished_at"] = utc_timestamp_now();
      manifest["status"] = status;
      write_manifest(run_dir, manifest);
    };

    CompletionRecord completion;
    try {
      completion = gateway.complete(prompt);
    } catch (const GatewayError& e) {
      log.append(e.record());
      finish(std::string(to_string(e.code())));
      throw;
    }
    log.append(completion);
    manifest["retries"] = completion.attempt_count - 1;
    std::vector<Rubric> rubrics;
    try {
      rubrics = parse_generated_rubrics(completion.response_text, corpus.course);
    } catch (const Error& e) {
      finish(std::string(to_string(e.code())));
      err << "raw response logged in " << (run_dir / "completions.jsonl").string() << "\n";
      throw;
    }
    ws.save_rubrics(rubrics);
    finish("ok");
    out << "wrote " << rubrics.size() << " rubrics to " << ws.rubrics_file().string() << " ("
        << run_id << ")\n";
    return kExitOk;
  });
}

int cmd_grade(const GradeOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const auto corpus = ingest(BundlePaths::in(options.common.course_dir));
    const Course& course = corpus.course;
    auto config = load_app_config(options.common.config_file);
    LlmConfig llm = config.grader;
    if (options.model) llm.model_id = *options.model;
    if (options.backend.endpoint) llm.endpoint = *options.backend.endpoint;
    llm.validate();
    const int parallel = options.parallel.value_or(config.parallel);
    if (parallel < 1) throw Error(ErrorCode::kInvalidConfig, "--parallel must be >= 1");

    Workspace ws(options.common.resolved_workdir());
    const Strategy strategy = options.strategy;
    const auto ledger = ws.ledger_file(llm.model_id, strategy);
    if (fs::exists(ledger) && !options.force) {
      throw Error(ErrorCode::kWouldOverwrite,
                  ledger.string() + " exists; pass --force to grade again");
    }

    // Rubric per question, checked before any model call.
    std::map<std::string, std::optional<Rubric>> rubrics;
    std::string rubric_digest;
    if (strategy == Strategy::kAnswersAndInstructorRubric) {
      for (const auto& q : course.questions) {
        if (!q.instructor_rubric) {
          throw Error(ErrorCode::kMissingRubric,
                      "question '" + q.id + "' has no instructor rubric in course.json");
        }
        rubrics[q.id] = q.instructor_rubric;
      }
    } else if (strategy == Strategy::kAnswersAndLlmRubric) {
      auto generated = ws.load_rubrics();
      if (!generated) {
        throw Error(ErrorCode::kMissingRubric,
                    "no generated rubrics at " + ws.rubrics_file().string() +
                        "; run gen-rubric first");
      }
      for (const auto& q : course.questions) {
        auto it = std::find_if(generated->begin(), generated->end(),
                               [&](const Rubric& r) { return r.question_id == q.id; });
        if (it == generated->end()) {
          throw Error(ErrorCode::kMissingRubric,
                      "no generated rubric for question '" + q.id + "'");
        }
        rubrics[q.id] = *it;
      }
      rubric_digest = json(*generated).dump();
    } else {
      for (const auto& q : course.questions) rubrics[q.id] = std::nullopt;
    }

    // Students in id order, questions in course order.
    std::vector<std::pair<const Submission*, std::size_t>> items;
    for (const auto& student : corpus.students()) {
      for (std::size_t q = 0; q < course.questions.size(); ++q) {
        items.emplace_back(corpus.find_submission(student, course.questions[q].id), q);
      }
    }
    std::vector<RenderedPrompt> prompts;
    prompts.reserve(items.size());
    for (const auto& [submission, q] : items) {
      const Question& question = course.questions[q];
      prompts.push_back(build_grading_prompt(strategy, question, q + 1, rubrics[question.id],
                                             *submission));
    }

    auto gateway = make_gateway(options.backend, llm);
    const std::string template_version =
        prompts.empty() ? std::string{} : prompts.front().template_version;
    const auto run_id =
        run_id_for({"grade", json(course).dump(), submissions_digest(corpus), rubric_digest,
                    to_cli_name(strategy), llm.model_id, template_version});
    const auto run_dir = prepare_run_dir(ws, run_id);
    RunLog log(run_dir / "completions.jsonl");
    const auto started = utc_timestamp_now();
    const GradeSource source = GradeSource::llm(strategy, llm.model_id);

    auto grade_item = [&](std::size_t i) {
      ItemResult result;
      const auto& [submission, q] = items[i];
      const Question& question = course.questions[q];
      try {
        try {
          result.completion = gateway.complete(prompts[i]);
        } catch (const GatewayError& e) {
          result.completion = e.record();
          result.gateway_failure = true;
          result.review = ReviewEntry{submission->student_id, question.id,
                                      std::string(to_cli_name(strategy)), llm.model_id,
                                      e.record().response_text, e.what()};
          return result;
        }
        auto parsed = parse_grade(result.completion.response_text, question.max_points);
        if (auto* grade = std::get_if<ParsedGrade>(&parsed)) {
          result.record = GradeRecord{submission->student_id, question.id, source, grade->score,
                                      grade->rationale, result.completion.response_text, run_id};
        } else {
          const auto& failure = std::get<GradeParseError>(parsed);
          result.review = ReviewEntry{submission->student_id, question.id,
                                      std::string(to_cli_name(strategy)), llm.model_id,
                                      result.completion.response_text,
                                      std::string(to_string(failure.code)) + ": " + failure.message};
        }
      } catch (...) {
        result.failure = std::current_exception();
      }
      return result;
    };

    std::vector<std::optional<ItemResult>> slots(items.size());
    std::mutex mu;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    auto worker = [&] {
      for (std::size_t i = next++; i < items.size() && !stop; i = next++) {
        auto r = grade_item(i);
        std::lock_guard lock(mu);
        slots[i] = std::move(r);
        ready.notify_all();
      }
    };

    auto partial = ledger;
    partial += ".partial";
    fs::create_directories(ledger.parent_path());
    std::ofstream ledger_out(partial, std::ios::binary | std::ios::trunc);
    if (!ledger_out) throw Error(ErrorCode::kIoError, "cannot write " + partial.string());

    std::vector<ReviewEntry> review;
    std::size_t graded = 0, parse_failures = 0, gateway_failures = 0, truncated = 0;
    long retries = 0;
    std::exception_ptr failure;
    {
      std::vector<std::jthread> pool;
      const auto nworkers = std::min<std::size_t>(static_cast<std::size_t>(parallel), items.size());
      for (std::size_t t = 0; t < nworkers; ++t) pool.emplace_back(worker);
      // Single writer: consume results in item order.
      for (std::size_t i = 0; i < items.size(); ++i) {
        ItemResult r;
        {
          std::unique_lock lock(mu);
          ready.wait(lock, [&] { return slots[i].has_value(); });
          r = std::move(*slots[i]);
          slots[i].reset();
        }
        if (r.failure) {
          failure = r.failure;
          stop = true;
          break;
        }
        log.append(r.completion);
        retries += std::max(0, r.completion.attempt_count - 1);
        truncated += r.completion.truncated ? 1 : 0;
        if (r.record) {
          ledger_out << json(*r.record).dump() << "\n";
          ++graded;
        } else {
          review.push_back(*r.review);
          ++(r.gateway_failure ? gateway_failures : parse_failures);
        }
      }
    }
    ledger_out.close();
    if (failure) {
      fs::remove(partial);
      std::rethrow_exception(failure);
    }
    fs::rename(partial, ledger);
    ws.replace_review_entries(llm.model_id, strategy, review);

    json manifest{{"run_id", run_id},
                  {"command", "grade"},
                  {"course_id", course.id},
                  {"strategies", {std::string(to_cli_name(strategy))}},
                  {"model_ids", {llm.model_id}},
                  {"template_version", template_version},
                  {"master_seed", config.seed},
                  {"parallel", parallel},
                  {"grading_order", "students by id, questions in course order"},
                  {"config", to_json_value(llm)},
                  {"started_at", started},
                  {"finished_at", utc_timestamp_now()},
                  {"counts",
                   {{"items", items.size()},
                    {"graded", graded},
                    {"parse_failures", parse_failures},
                    {"gateway_failures", gateway_failures},
                    {"retries", retries},
                    {"truncated", truncated}}},
                  {"ledger", ledger.string()}};
    write_manifest(run_dir, manifest);

    out << run_id << ": " << graded << "/" << items.size() << " graded, " << parse_failures
        << " parse failures, " << gateway_failures << " gateway failures, " << retries
        << " retries -> " << ledger.string() << "\n";
    if (!review.empty()) {
      err << review.size() << " item(s) queued for review in " << ws.review_queue_file().string()
          << "\n";
    }
    if (gateway_failures > 0) return kExitGateway;
    if (parse_failures > 0) return kExitParseFailures;
    return kExitOk;
  });
}

int cmd_evaluate(const EvaluateOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const auto corpus = ingest(BundlePaths::in(options.common.course_dir));
    const Course& course = corpus.course;
    auto config = load_app_config(options.common.config_file);
    const int resamples = options.resamples.value_or(config.resamples);
    const std::uint64_t seed = options.seed.value_or(config.seed);
    if (resamples < 1) throw Error(ErrorCode::kInvalidConfig, "--resamples must be >= 1");

    Workspace ws(options.common.resolved_workdir());
    auto records = load_records(corpus, ws);
    auto samples = build_samples(course, records);

    if (!options.sources.empty()) {
      std::set<std::string> available;
      for (const auto& s : samples) available.insert(s.source.key());
      std::set<std::string> wanted{GradeSource::instructor().key()};
      for (const auto& key : options.sources) {
        if (!available.count(key)) {
          std::string list;
          for (const auto& a : available) list += (list.empty() ? "" : ", ") + a;
          err << "error: no records for source '" << key << "'; available: " << list << "\n";
          return kExitEvalData;
        }
        wanted.insert(key);
      }
      std::erase_if(samples, [&](const GradeSample& s) { return !wanted.count(s.source.key()); });
    }

    auto summaries = bootstrap_all(samples, resamples, seed);
    auto alignment = alignment_report(samples, summaries);

    const auto raw_table = render_raw_table(course, samples);
    const auto boot_table = render_bootstrap_table(course, summaries);
    const auto alignment_text = render_alignment(course, alignment);
    std::ostringstream summaries_csv, raw_csv;
    write_summaries_csv(summaries_csv, summaries);
    write_raw_means_csv(raw_csv, samples);

    const auto dir = ws.reports_dir();
    fs::create_directories(dir);
    const std::string header = "# " + course.id + ", " + std::to_string(resamples) +
                               " resamples, seed " + std::to_string(seed) + ", " +
                               std::string(kResamplerId) + "\n\n";
    write_file_atomically(dir / "raw_table.txt", "# " + course.id + ", average grades\n\n" + raw_table);
    write_file_atomically(dir / "bootstrap_table.txt", header + boot_table);
    write_file_atomically(dir / "alignment.txt", alignment_text);
    write_file_atomically(dir / "summaries.csv", summaries_csv.str());
    write_file_atomically(dir / "raw_means.csv", raw_csv.str());

    out << raw_table << "\n" << boot_table << "\nreports written to " << dir.string() << "\n";
    return kExitOk;
  });
}

int cmd_report(const CommonOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const auto corpus = ingest(BundlePaths::in(options.course_dir));
    Workspace ws(options.resolved_workdir());
    auto records = load_records(corpus, ws);
    auto samples = build_samples(corpus.course, records);
    std::vector<BootstrapSummary> summaries;
    const auto csv = ws.reports_dir() / "summaries.csv";
    if (fs::exists(csv)) {
      std::ifstream in(csv);
      summaries = read_summaries_csv(in);
    }
    out << "Average grades\n\n" << render_raw_table(corpus.course, samples);
    if (summaries.empty()) {
      out << "\nno bootstrap summaries yet; run evaluate\n";
    } else {
      out << "\nBootstrap means and standard deviations\n\n"
          << render_bootstrap_table(corpus.course, summaries);
    }
    out << "\n" << render_alignment(corpus.course, alignment_report(samples, summaries));
    return kExitOk;
  });
}

}  // namespace grader
