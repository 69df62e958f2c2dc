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

#include "grader/eval/samples.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "grader/error.hpp"
#include "grader/eval/median.hpp"

namespace grader {

double GradeSample::mean() const {
  if (values.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& [student, score] : values) sum += score;
  return sum / static_cast<double>(values.size());
}

double GradeSample::population_sd() const {
  if (values.empty()) return 0.0;
  const double m = mean();
  double acc = 0.0;
  for (const auto& [student, score] : values) acc += (score - m) * (score - m);
  return std::sqrt(acc / static_cast<double>(values.size()));
}

bool source_display_less(const GradeSource& a, const GradeSource& b) {
  auto rank = [](GradeSource::Kind k) {
    switch (k) {
      case GradeSource::Kind::kInstructor: return 0;
      case GradeSource::Kind::kPeerMedian: return 1;
      case GradeSource::Kind::kPeerRaw: return 2;
      case GradeSource::Kind::kLlm: return 3;
    }
    return 4;
  };
  return std::make_tuple(rank(a.kind), a.peer_index, a.model_id, static_cast<int>(a.strategy)) <
         std::make_tuple(rank(b.kind), b.peer_index, b.model_id, static_cast<int>(b.strategy));
}

std::vector<GradeSample> build_samples(const Course& course,
                                       std::span<const GradeRecord> records) {
  struct SourceLess {
    bool operator()(const GradeSource& a, const GradeSource& b) const {
      return source_display_less(a, b);
    }
  };
  std::map<std::size_t, std::map<GradeSource, std::map<std::string, double>, SourceLess>> cells;
  for (const auto& r : records) {
    if (r.source.kind == GradeSource::Kind::kPeerRaw) continue;
    const std::size_t qnum = course.question_number(r.question_id);
    if (qnum == 0) {
      throw Error(ErrorCode::kInvalidSample, "unknown question '" + r.question_id + "'");
    }
    const Question& q = course.questions[qnum - 1];
    if (!(r.score >= 0.0 && r.score <= q.max_points)) {
      throw Error(ErrorCode::kInvalidSample,
                  r.source.key() + " score " + std::to_string(r.score) + " for " + r.student_id +
                      "/" + q.id + " outside [0, " + std::to_string(q.max_points) + "]");
    }
    auto& cell = cells[qnum][r.source];
    if (!cell.emplace(r.student_id, r.score).second) {
      throw Error(ErrorCode::kInvalidSample, "duplicate " + r.source.key() + " grade for " +
                                                 r.student_id + "/" + q.id);
    }
  }
  std::vector<GradeSample> out;
  for (const auto& [qnum, by_source] : cells) {
    for (const auto& [source, by_student] : by_source) {
      GradeSample sample{course.questions[qnum - 1].id, source, {}};
      sample.values.assign(by_student.begin(), by_student.end());
      out.push_back(std::move(sample));
    }
  }
  return out;
}

std::vector<GradeRecord> aggregate_peer_medians(std::span<const GradeRecord> records) {
  std::map<std::pair<std::string, std::string>, std::vector<double>> peers;
  for (const auto& r : records) {
    if (r.source.kind == GradeSource::Kind::kPeerRaw) {
      peers[{r.question_id, r.student_id}].push_back(r.score);
    }
  }
  std::vector<GradeRecord> out;
  for (const auto& [key, scores] : peers) {
    GradeRecord rec;
    rec.question_id = key.first;
    rec.student_id = key.second;
    rec.source = GradeSource::peer_median();
    rec.score = peer_median(scores);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace grader
