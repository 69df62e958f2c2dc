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

#ifndef GRADER_EVAL_FORMAT_HPP
#define GRADER_EVAL_FORMAT_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "grader/eval/bootstrap.hpp"
#include "grader/eval/samples.hpp"

namespace grader {

/// Two decimals, ties rounded away from zero ("2.675" -> "2.68"). The tie is
/// decided on the value printed to 12 decimals, so 2.675 stored as
/// 2.67499999... still counts as a tie. Never prints "-0.00".
std::string format_points(double value);

/// "mean ± std" with both halves from format_points.
std::string format_mean_std(double mean, double std);

/// Shortest text that parses back to the same double.
std::string format_exact(double value);

/// summaries.csv: question,source,n,resamples,seed,mean,std
void write_summaries_csv(std::ostream& out, std::span<const BootstrapSummary> rows);
std::vector<BootstrapSummary> read_summaries_csv(std::istream& in);

/// raw_means.csv: question,source,n,mean
void write_raw_means_csv(std::ostream& out, std::span<const GradeSample> samples);

}  // namespace grader

#endif  // GRADER_EVAL_FORMAT_HPP
