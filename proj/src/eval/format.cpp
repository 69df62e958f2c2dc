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

#include "grader/eval/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "grader/error.hpp"

namespace grader {
namespace {

constexpr const char* kSummariesHeader = "question,source,n,resamples,seed,mean,std";

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

template <typename T>
T parse_field(const std::string& s, int line, const char* what) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kSchemaError,
                "summaries.csv:" + std::to_string(line) + ": bad " + what + " '" + s + "'");
  }
  return v;
}

}  // namespace

std::string format_points(double value) {
  if (!std::isfinite(value)) return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", std::fabs(value));
  std::string s = buf;
  const auto dot = s.find('.');
  std::string digits = s.substr(0, dot) + s.substr(dot + 1, 2);
  if (s[dot + 3] >= '5') {
    int i = static_cast<int>(digits.size()) - 1;
    while (i >= 0 && digits[i] == '9') digits[i--] = '0';
    if (i < 0) {
      digits.insert(digits.begin(), '1');
    } else {
      ++digits[i];
    }
  }
  std::string out = digits.substr(0, digits.size() - 2) + "." + digits.substr(digits.size() - 2);
  if (value < 0 && out.find_first_not_of("0.") != std::string::npos) out.insert(0, "-");
  return out;
}

std::string format_mean_std(double mean, double std) {
  return format_points(mean) + " ± " + format_points(std);
}

std::string format_exact(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

void write_summaries_csv(std::ostream& out, std::span<const BootstrapSummary> rows) {
  out << kSummariesHeader << '\n';
  for (const auto& r : rows) {
    out << csv_field(r.question_id) << ',' << csv_field(r.source.key()) << ',' << r.n << ','
        << r.resamples << ',' << r.seed << ',' << format_exact(r.mean_of_means) << ','
        << format_exact(r.std_of_means) << '\n';
  }
}

std::vector<BootstrapSummary> read_summaries_csv(std::istream& in) {
  std::vector<BootstrapSummary> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1) {
      if (line != kSummariesHeader) {
        throw Error(ErrorCode::kSchemaError, "summaries.csv:1: unexpected header '" + line + "'");
      }
      continue;
    }
    if (line.empty()) continue;
    auto f = split_csv_line(line);
    if (f.size() != 7) {
      throw Error(ErrorCode::kSchemaError,
                  "summaries.csv:" + std::to_string(lineno) + ": expected 7 fields");
    }
    auto source = GradeSource::from_key(f[1]);
    if (!source) {
      throw Error(ErrorCode::kSchemaError,
                  "summaries.csv:" + std::to_string(lineno) + ": bad source '" + f[1] + "'");
    }
    BootstrapSummary s;
    s.question_id = f[0];
    s.source = *source;
    s.n = parse_field<std::size_t>(f[2], lineno, "n");
    s.resamples = parse_field<int>(f[3], lineno, "resamples");
    s.seed = parse_field<std::uint64_t>(f[4], lineno, "seed");
    s.mean_of_means = parse_field<double>(f[5], lineno, "mean");
    s.std_of_means = parse_field<double>(f[6], lineno, "std");
    rows.push_back(std::move(s));
  }
  return rows;
}

void write_raw_means_csv(std::ostream& out, std::span<const GradeSample> samples) {
  out << "question,source,n,mean\n";
  for (const auto& s : samples) {
    out << csv_field(s.question_id) << ',' << csv_field(s.source.key()) << ',' << s.values.size()
        << ',' << format_exact(s.mean()) << '\n';
  }
}

}  // namespace grader
