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

#ifndef GRADER_EVAL_SAMPLES_HPP
#define GRADER_EVAL_SAMPLES_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grader/core/model.hpp"

namespace grader {

/// Every score one source gave on one question, one per student, sorted by
/// student id.
struct GradeSample {
  std::string question_id;
  GradeSource source;
  std::vector<std::pair<std::string, double>> values;

  double mean() const;
  /// Population (divide-by-n) standard deviation.
  double population_sd() const;
};

/// Groups records by (question, source). Samples come out in course question
/// order, then source order (instructor, peer, LLM sources by model id and
/// strategy); values sorted by student id. PeerRaw records are skipped.
/// Throws InvalidSample for unknown questions, duplicate students within a
/// cell, or scores outside [0, max_points].
std::vector<GradeSample> build_samples(const Course& course, std::span<const GradeRecord> records);

/// One PeerMedian record per (student, question) that has PeerRaw records.
std::vector<GradeRecord> aggregate_peer_medians(std::span<const GradeRecord> records);

/// Display order for sources: instructor, peer median, raw peers, then LLM
/// sources by model id and strategy.
bool source_display_less(const GradeSource& a, const GradeSource& b);

}  // namespace grader

#endif  // GRADER_EVAL_SAMPLES_HPP
