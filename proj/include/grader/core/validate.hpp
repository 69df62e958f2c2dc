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

#ifndef GRADER_CORE_VALIDATE_HPP
#define GRADER_CORE_VALIDATE_HPP

#include <string>
#include <vector>

#include "grader/core/model.hpp"

namespace grader {

/// A broken invariant. `path` addresses the offending field, e.g.
/// "questions[q2].instructor_rubric".
struct Finding {
  std::string path;
  std::string message;

  std::string to_string() const { return path + ": " + message; }
  bool operator==(const Finding&) const = default;
};

/// Empty iff every Course/Question/Rubric invariant holds.
std::vector<Finding> validate_course(const Course& course);

/// Checks a rubric against the question it grades. `path` prefixes findings.
std::vector<Finding> validate_rubric(const Rubric& rubric, const Question& question,
                                     const std::string& path);

}  // namespace grader

#endif  // GRADER_CORE_VALIDATE_HPP
