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

#ifndef GRADER_CORE_JSON_IO_HPP
#define GRADER_CORE_JSON_IO_HPP

#include <json.hpp>

#include "grader/core/model.hpp"

// JSON shapes for the domain types. from_json throws nlohmann::json::exception
// on missing or mistyped fields; ingestion turns those into line-addressed
// SchemaErrors.
namespace grader {

void to_json(nlohmann::json& j, const RubricOption& v);
void from_json(const nlohmann::json& j, RubricOption& v);
void to_json(nlohmann::json& j, const RubricItem& v);
void from_json(const nlohmann::json& j, RubricItem& v);
void to_json(nlohmann::json& j, const Rubric& v);
void from_json(const nlohmann::json& j, Rubric& v);
void to_json(nlohmann::json& j, const Question& v);
void from_json(const nlohmann::json& j, Question& v);
void to_json(nlohmann::json& j, const Course& v);
void from_json(const nlohmann::json& j, Course& v);
void to_json(nlohmann::json& j, const Submission& v);
void from_json(const nlohmann::json& j, Submission& v);
void to_json(nlohmann::json& j, const GradeSource& v);
void from_json(const nlohmann::json& j, GradeSource& v);
void to_json(nlohmann::json& j, const GradeRecord& v);
void from_json(const nlohmann::json& j, GradeRecord& v);

}  // namespace grader

#endif  // GRADER_CORE_JSON_IO_HPP
