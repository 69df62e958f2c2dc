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

#include "grader/eval/alignment.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "grader/error.hpp"

namespace grader {
namespace {

struct Mean {
  std::string question_id;
  GradeSource source;
  double value = 0.0;
};

AlignmentTable build_table(const std::vector<Mean>& means) {
  std::vector<std::string> question_order;
  std::map<std::string, std::vector<const Mean*>> by_question;
  for (const auto& m : means) {
    auto [it, inserted] = by_question.try_emplace(m.question_id);
    if (inserted) question_order.push_back(m.question_id);
    it->second.push_back(&m);
  }

  AlignmentTable table;
  std::vector<GradeSource> source_order;
  std::map<std::string, std::pair<double, std::size_t>> totals;  // key -> (sum, count)
  for (const auto& qid : question_order) {
    auto& rows = by_question[qid];
    std::stable_sort(rows.begin(), rows.end(), [](const Mean* a, const Mean* b) {
      return source_display_less(a->source, b->source);
    });
    auto instr = std::find_if(rows.begin(), rows.end(), [](const Mean* m) {
      return m->source.kind == GradeSource::Kind::kInstructor;
    });
    if (instr == rows.end()) {
      throw Error(ErrorCode::kMissingInstructorSample, "question '" + qid + "'");
    }
    const double truth = (*instr)->value;
    const std::size_t first = table.cells.size();
    for (const Mean* m : rows) {
      DeviationCell cell{qid, m->source, m->value, truth, std::abs(m->value - truth), 0};
      if (m->source.kind == GradeSource::Kind::kInstructor) cell.deviation = 0.0;
      table.cells.push_back(cell);
      auto key = m->source.key();
      if (!totals.count(key)) source_order.push_back(m->source);
      auto& [sum, count] = totals[key];
      sum += cell.deviation;
      ++count;
    }
    for (std::size_t i = first; i < table.cells.size(); ++i) {
      auto& cell = table.cells[i];
      if (cell.source.kind == GradeSource::Kind::kInstructor) continue;
      int better = 0;
      for (std::size_t j = first; j < table.cells.size(); ++j) {
        const auto& other = table.cells[j];
        if (other.source.kind == GradeSource::Kind::kInstructor) continue;
        if (other.deviation < cell.deviation - kRankTieTolerance) ++better;
      }
      cell.rank = better + 1;
    }
  }
  std::stable_sort(source_order.begin(), source_order.end(), source_display_less);
  for (const auto& source : source_order) {
    if (source.kind == GradeSource::Kind::kInstructor) continue;
    auto [sum, count] = totals[source.key()];
    table.course.push_back({source, sum / static_cast<double>(count), count});
  }
  return table;
}

}  // namespace

const DeviationCell* AlignmentTable::find(const std::string& question_id,
                                          const GradeSource& source) const {
  for (const auto& c : cells) {
    if (c.question_id == question_id && c.source == source) return &c;
  }
  return nullptr;
}

const CourseDeviation* AlignmentTable::find(const GradeSource& source) const {
  for (const auto& c : course) {
    if (c.source == source) return &c;
  }
  return nullptr;
}

AlignmentReport alignment_report(std::span<const GradeSample> samples,
                                 std::span<const BootstrapSummary> summaries) {
  std::vector<Mean> raw;
  for (const auto& s : samples) {
    if (s.values.empty()) continue;
    raw.push_back({s.question_id, s.source, s.mean()});
  }
  AlignmentReport report;
  report.raw = build_table(raw);
  if (!summaries.empty()) {
    std::vector<Mean> boot;
    for (const auto& s : summaries) boot.push_back({s.question_id, s.source, s.mean_of_means});
    report.resampled = build_table(boot);
  }
  return report;
}

}  // namespace grader
