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

#include "grader/core/model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace grader {

int RubricItem::max_points() const {
  int best = 0;
  for (const auto& opt : options) best = std::max(best, opt.points);
  return best;
}

int Rubric::max_attainable() const {
  return std::accumulate(items.begin(), items.end(), 0,
                         [](int acc, const RubricItem& item) { return acc + item.max_points(); });
}

const Question* Course::find_question(std::string_view qid) const {
  for (const auto& q : questions) {
    if (q.id == qid) return &q;
  }
  return nullptr;
}

std::size_t Course::question_number(std::string_view qid) const {
  for (std::size_t i = 0; i < questions.size(); ++i) {
    if (questions[i].id == qid) return i + 1;
  }
  return 0;
}

bool Submission::is_empty() const {
  return std::all_of(answer_text.begin(), answer_text.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

std::string_view to_cli_name(Strategy s) {
  switch (s) {
    case Strategy::kAnswersOnly: return "answers";
    case Strategy::kAnswersAndInstructorRubric: return "answers+rubric";
    case Strategy::kAnswersAndLlmRubric: return "answers+llm-rubric";
  }
  return "answers";
}

std::optional<Strategy> strategy_from_cli_name(std::string_view name) {
  for (Strategy s : kAllStrategies) {
    if (to_cli_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view to_display_name(Strategy s) {
  switch (s) {
    case Strategy::kAnswersOnly: return "Instr. Ans.";
    case Strategy::kAnswersAndInstructorRubric: return "Instr. Ans. & Instr. Rub.";
    case Strategy::kAnswersAndLlmRubric: return "Instr. Ans. & LLM Rub.";
  }
  return "";
}

bool requires_rubric(Strategy s) { return s != Strategy::kAnswersOnly; }

std::string GradeSource::key() const {
  switch (kind) {
    case Kind::kInstructor: return "instructor";
    case Kind::kPeerMedian: return "peer";
    case Kind::kPeerRaw: return "peer-raw/" + std::to_string(peer_index);
    case Kind::kLlm: return model_id + "/" + std::string(to_cli_name(strategy));
  }
  return {};
}

std::optional<GradeSource> GradeSource::from_key(std::string_view key) {
  if (key == "instructor") return instructor();
  if (key == "peer") return peer_median();
  constexpr std::string_view kPeerRaw = "peer-raw/";
  if (key.starts_with(kPeerRaw)) {
    auto digits = key.substr(kPeerRaw.size());
    int index = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc{} || end != digits.data() + digits.size() || index < 0) {
      return std::nullopt;
    }
    return peer_raw(index);
  }
  // Model ids may contain '/', the strategy never does.
  auto slash = key.rfind('/');
  if (slash == std::string_view::npos || slash == 0) return std::nullopt;
  auto strategy = strategy_from_cli_name(key.substr(slash + 1));
  if (!strategy) return std::nullopt;
  return llm(*strategy, std::string(key.substr(0, slash)));
}

}  // namespace grader
