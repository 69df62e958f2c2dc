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

#include "grader/core/json_io.hpp"

namespace grader {

using nlohmann::json;

namespace {

template <typename T>
void get_optional(const json& j, const char* key, std::optional<T>& out) {
  if (auto it = j.find(key); it != j.end() && !it->is_null()) {
    out = it->get<T>();
  } else {
    out.reset();
  }
}

}  // namespace

void to_json(json& j, const RubricOption& v) {
  j = json{{"points", v.points}, {"descriptor", v.descriptor}};
}

void from_json(const json& j, RubricOption& v) {
  j.at("points").get_to(v.points);
  v.descriptor = j.value("descriptor", std::string{});
}

void to_json(json& j, const RubricItem& v) {
  j = json{{"criterion", v.criterion}, {"options", v.options}};
}

void from_json(const json& j, RubricItem& v) {
  j.at("criterion").get_to(v.criterion);
  j.at("options").get_to(v.options);
}

void to_json(json& j, const Rubric& v) {
  j = json{{"question_id", v.question_id},
           {"source", v.source == RubricSource::kInstructor ? "instructor" : "llm-generated"},
           {"items", v.items}};
}

void from_json(const json& j, Rubric& v) {
  v.question_id = j.value("question_id", std::string{});
  auto source = j.value("source", std::string{"instructor"});
  if (source == "instructor") {
    v.source = RubricSource::kInstructor;
  } else if (source == "llm-generated") {
    v.source = RubricSource::kLlmGenerated;
  } else {
    throw json::other_error::create(501, "unknown rubric source '" + source + "'", &j);
  }
  j.at("items").get_to(v.items);
}

void to_json(json& j, const Question& v) {
  j = json{{"id", v.id},
           {"text", v.text},
           {"max_points", v.max_points},
           {"correct_answer", v.correct_answer}};
  if (v.instructor_rubric) j["rubric"] = *v.instructor_rubric;
}

void from_json(const json& j, Question& v) {
  j.at("id").get_to(v.id);
  j.at("text").get_to(v.text);
  j.at("max_points").get_to(v.max_points);
  j.at("correct_answer").get_to(v.correct_answer);
  v.instructor_rubric.reset();
  if (auto it = j.find("rubric"); it != j.end() && !it->is_null()) {
    Rubric r = it->get<Rubric>();
    // The owning question is implied by nesting.
    if (r.question_id.empty()) r.question_id = v.id;
    v.instructor_rubric = std::move(r);
  }
}

void to_json(json& j, const Course& v) {
  j = json{{"id", v.id}, {"name", v.name}, {"questions", v.questions}};
}

void from_json(const json& j, Course& v) {
  j.at("id").get_to(v.id);
  v.name = j.value("name", v.id);
  j.at("questions").get_to(v.questions);
}

void to_json(json& j, const Submission& v) {
  j = json{{"student_id", v.student_id},
           {"question_id", v.question_id},
           {"answer_text", v.answer_text}};
}

void from_json(const json& j, Submission& v) {
  j.at("student_id").get_to(v.student_id);
  j.at("question_id").get_to(v.question_id);
  j.at("answer_text").get_to(v.answer_text);
}

void to_json(json& j, const GradeSource& v) {
  switch (v.kind) {
    case GradeSource::Kind::kInstructor:
      j = json{{"kind", "instructor"}};
      break;
    case GradeSource::Kind::kPeerMedian:
      j = json{{"kind", "peer-median"}};
      break;
    case GradeSource::Kind::kPeerRaw:
      j = json{{"kind", "peer-raw"}, {"peer_index", v.peer_index}};
      break;
    case GradeSource::Kind::kLlm:
      j = json{{"kind", "llm"}, {"model", v.model_id}, {"strategy", to_cli_name(v.strategy)}};
      break;
  }
}

void from_json(const json& j, GradeSource& v) {
  auto kind = j.at("kind").get<std::string>();
  if (kind == "instructor") {
    v = GradeSource::instructor();
  } else if (kind == "peer-median") {
    v = GradeSource::peer_median();
  } else if (kind == "peer-raw") {
    v = GradeSource::peer_raw(j.at("peer_index").get<int>());
  } else if (kind == "llm") {
    auto name = j.at("strategy").get<std::string>();
    auto strategy = strategy_from_cli_name(name);
    if (!strategy) throw json::other_error::create(501, "unknown strategy '" + name + "'", &j);
    v = GradeSource::llm(*strategy, j.at("model").get<std::string>());
  } else {
    throw json::other_error::create(501, "unknown source kind '" + kind + "'", &j);
  }
}

void to_json(json& j, const GradeRecord& v) {
  j = json{{"student_id", v.student_id},
           {"question_id", v.question_id},
           {"source", v.source},
           {"score", v.score}};
  if (v.rationale) j["rationale"] = *v.rationale;
  if (v.raw_response) j["raw_response"] = *v.raw_response;
  if (v.run_id) j["run_id"] = *v.run_id;
}

void from_json(const json& j, GradeRecord& v) {
  j.at("student_id").get_to(v.student_id);
  j.at("question_id").get_to(v.question_id);
  j.at("source").get_to(v.source);
  j.at("score").get_to(v.score);
  get_optional(j, "rationale", v.rationale);
  get_optional(j, "raw_response", v.raw_response);
  get_optional(j, "run_id", v.run_id);
}

}  // namespace grader
