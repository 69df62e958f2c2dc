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

#include "grader/app/report.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "grader/eval/format.hpp"

namespace grader {
namespace {

// Terminal width of UTF-8 text, counting each code point as one column.
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string pad_left(const std::string& s, std::size_t width) {
  const auto w = display_width(s);
  return w >= width ? s : std::string(width - w, ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  const auto w = display_width(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

struct Column {
  std::string group;   // spanning label above the header, may be empty
  std::string header;
  bool left_aligned = false;
  std::vector<std::string> cells;
  std::size_t width = 0;
};

void strip_trailing_blanks(std::string& line) {
  while (!line.empty() && line.back() == ' ') line.pop_back();
}

std::string render_columns(std::vector<Column>& cols) {
  constexpr std::size_t kGap = 2;
  for (auto& c : cols) {
    c.width = display_width(c.header);
    for (const auto& cell : c.cells) c.width = std::max(c.width, display_width(cell));
  }
  // Widen the last column of a group until the group label fits.
  bool any_group = false;
  for (std::size_t i = 0; i < cols.size();) {
    std::size_t j = i + 1;
    while (j < cols.size() && !cols[i].group.empty() && cols[j].group == cols[i].group) ++j;
    if (!cols[i].group.empty()) {
      any_group = true;
      std::size_t span = kGap * (j - i - 1);
      for (std::size_t k = i; k < j; ++k) span += cols[k].width;
      const auto need = display_width(cols[i].group);
      if (need > span) cols[j - 1].width += need - span;
    }
    i = j;
  }

  std::string out;
  if (any_group) {
    std::string line;
    for (std::size_t i = 0; i < cols.size();) {
      std::size_t j = i + 1;
      while (j < cols.size() && !cols[i].group.empty() && cols[j].group == cols[i].group) ++j;
      std::size_t span = kGap * (j - i - 1);
      for (std::size_t k = i; k < j; ++k) span += cols[k].width;
      if (i > 0) line += std::string(kGap, ' ');
      line += pad_right(cols[i].group, span);
      i = j;
    }
    strip_trailing_blanks(line);
    out += line + "\n";
  }
  const std::size_t rows = cols.empty() ? 0 : cols.front().cells.size();
  for (std::size_t r = 0; r <= rows; ++r) {
    std::string line;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const auto& c = cols[i];
      const std::string& text = r == 0 ? c.header : c.cells[r - 1];
      if (i > 0) line += std::string(kGap, ' ');
      line += c.left_aligned ? pad_right(text, c.width) : pad_left(text, c.width);
    }
    strip_trailing_blanks(line);
    out += line + "\n";
  }
  return out;
}

// Sources shown as table columns: instructor, peer median when present, and
// all three strategies for each model present.
std::vector<GradeSource> table_sources(const std::set<GradeSource>& present) {
  std::vector<GradeSource> out{GradeSource::instructor()};
  if (present.count(GradeSource::peer_median())) out.push_back(GradeSource::peer_median());
  std::set<std::string> models;
  for (const auto& s : present) {
    if (s.kind == GradeSource::Kind::kLlm) models.insert(s.model_id);
  }
  for (const auto& m : models) {
    for (Strategy st : kAllStrategies) out.push_back(GradeSource::llm(st, m));
  }
  return out;
}

std::string render_source_table(const Course& course,
                                 const std::map<std::pair<std::string, GradeSource>, std::string>& cells) {
  std::set<GradeSource> present;
  for (const auto& [key, text] : cells) present.insert(key.second);
  const auto sources = table_sources(present);

  std::vector<Column> cols;
  cols.push_back({"", "Course", true, {}, 0});
  cols.push_back({"", "Q", true, {}, 0});
  for (const auto& s : sources) {
    Column c;
    if (s.kind == GradeSource::Kind::kLlm) {
      c.group = s.model_id;
      c.header = std::string(to_display_name(s.strategy));
    } else {
      c.header = source_label(s);
    }
    cols.push_back(std::move(c));
  }
  for (std::size_t q = 0; q < course.questions.size(); ++q) {
    const auto& qid = course.questions[q].id;
    cols[0].cells.push_back(q == 0 ? course.id : "");
    cols[1].cells.push_back("Q" + std::to_string(q + 1));
    for (std::size_t i = 0; i < sources.size(); ++i) {
      auto it = cells.find({qid, sources[i]});
      cols[i + 2].cells.push_back(it == cells.end() ? "-" : it->second);
    }
  }
  return render_columns(cols);
}

std::string render_alignment_table(const Course& course, const AlignmentTable& table) {
  std::vector<Column> cols{{"", "Q", true, {}, 0},          {"", "Source", true, {}, 0},
                           {"", "Mean", false, {}, 0},      {"", "Instructor", false, {}, 0},
                           {"", "|Deviation|", false, {}, 0}, {"", "Rank", false, {}, 0}};
  for (const auto& c : table.cells) {
    if (c.source.kind == GradeSource::Kind::kInstructor) continue;
    const auto qnum = course.question_number(c.question_id);
    cols[0].cells.push_back(qnum ? "Q" + std::to_string(qnum) : c.question_id);
    cols[1].cells.push_back(source_label(c.source));
    cols[2].cells.push_back(format_points(c.mean));
    cols[3].cells.push_back(format_points(c.instructor_mean));
    cols[4].cells.push_back(format_points(c.deviation));
    cols[5].cells.push_back(std::to_string(c.rank));
  }
  std::string out = render_columns(cols);
  std::vector<Column> course_cols{{"", "Source", true, {}, 0},
                                  {"", "Mean |Deviation|", false, {}, 0},
                                  {"", "Questions", false, {}, 0}};
  for (const auto& c : table.course) {
    course_cols[0].cells.push_back(source_label(c.source));
    course_cols[1].cells.push_back(format_points(c.mean_abs_deviation));
    course_cols[2].cells.push_back(std::to_string(c.questions));
  }
  out += "\n" + render_columns(course_cols);
  return out;
}

}  // namespace

std::string source_label(const GradeSource& source) {
  switch (source.kind) {
    case GradeSource::Kind::kInstructor: return "Instr. Grades";
    case GradeSource::Kind::kPeerMedian: return "Peer Grades";
    case GradeSource::Kind::kPeerRaw: return "Peer " + std::to_string(source.peer_index);
    case GradeSource::Kind::kLlm:
      return source.model_id + " " + std::string(to_display_name(source.strategy));
  }
  return source.key();
}

std::string render_raw_table(const Course& course, std::span<const GradeSample> samples) {
  std::map<std::pair<std::string, GradeSource>, std::string> cells;
  for (const auto& s : samples) {
    if (s.values.empty()) continue;
    cells[{s.question_id, s.source}] = format_points(s.mean());
  }
  return render_source_table(course, cells);
}

std::string render_bootstrap_table(const Course& course,
                                   std::span<const BootstrapSummary> summaries) {
  std::map<std::pair<std::string, GradeSource>, std::string> cells;
  for (const auto& s : summaries) {
    cells[{s.question_id, s.source}] = format_mean_std(s.mean_of_means, s.std_of_means);
  }
  return render_source_table(course, cells);
}

std::string render_alignment(const Course& course, const AlignmentReport& report) {
  std::string out = "Deviation from instructor grades, raw means\n\n";
  out += render_alignment_table(course, report.raw);
  if (report.resampled) {
    out += "\nDeviation from instructor grades, bootstrap means\n\n";
    out += render_alignment_table(course, *report.resampled);
  }
  return out;
}

}  // namespace grader
