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

#include <random>

#include <gtest/gtest.h>

#include "grade_oracle.hpp"
#include "grade_corpus.hpp"
#include "grader/parse/grade_parser.hpp"

namespace grader {
namespace {

using testing::OracleResult;

OracleResult::Kind kind_of(const GradeParseResult& r) {
  if (is_parsed(r)) return OracleResult::Kind::kOk;
  switch (std::get<GradeParseError>(r).code) {
    case ErrorCode::kOutOfRange: return OracleResult::Kind::kOutOfRange;
    case ErrorCode::kDenominatorMismatch: return OracleResult::Kind::kDenominatorMismatch;
    default: return OracleResult::Kind::kUnparsable;
  }
}

void expect_agrees_with_oracle(const std::string& text, int max_points) {
  SCOPED_TRACE(::testing::Message() << "max " << max_points << " text: " << text);
  const auto got = parse_grade(text, max_points);
  const auto want = testing::oracle_parse(text, max_points);
  ASSERT_EQ(kind_of(got), want.kind);
  if (const auto* p = std::get_if<ParsedGrade>(&got)) {
    EXPECT_EQ(p->score, want.score);
    EXPECT_EQ(std::string(to_string(p->rule)), want.rule);
    EXPECT_EQ(p->rationale, want.rationale);
    EXPECT_EQ(p->raw_response, text);
  } else {
    EXPECT_EQ(std::get<GradeParseError>(got).raw_response, text);
  }
}

TEST(GradeParser, CorpusMatchesHandLabels) {
  const auto& corpus = testing::grade_corpus();
  ASSERT_GE(corpus.size(), 30u);
  for (const auto& c : corpus) {
    SCOPED_TRACE(c.text);
    const auto got = parse_grade(c.text, c.max_points);
    ASSERT_EQ(kind_of(got), c.kind);
    if (c.kind == OracleResult::Kind::kOk) {
      EXPECT_EQ(std::get<ParsedGrade>(got).score, c.score);
      EXPECT_EQ(std::string(to_string(std::get<ParsedGrade>(got).rule)), c.rule);
    }
  }
}

TEST(GradeParser, CorpusAgreesWithOracle) {
  for (const auto& c : testing::grade_corpus()) expect_agrees_with_oracle(c.text, c.max_points);
}

TEST(GradeParser, FigureOpeningsParse) {
  auto nine = parse_grade("9/10\n\nThe student has correctly identified the methods.", 10);
  ASSERT_TRUE(is_parsed(nine));
  EXPECT_EQ(std::get<ParsedGrade>(nine).score, 9.0);
  EXPECT_EQ(std::get<ParsedGrade>(nine).rationale, "The student has correctly identified the methods.");
  auto ten = parse_grade("10/10\n\nThe student correctly identified both detection methods.", 10);
  ASSERT_TRUE(is_parsed(ten));
  EXPECT_EQ(std::get<ParsedGrade>(ten).score, 10.0);
}

TEST(GradeParser, NeverClamps) {
  auto over = parse_grade("11/10 excellent work", 10);
  ASSERT_FALSE(is_parsed(over));
  EXPECT_EQ(std::get<GradeParseError>(over).code, ErrorCode::kOutOfRange);
  auto under = parse_grade("Grade: -1", 10);
  ASSERT_FALSE(is_parsed(under));
  EXPECT_EQ(std::get<GradeParseError>(under).code, ErrorCode::kOutOfRange);
}

TEST(GradeParser, RejectsNonPositiveMax) {
  EXPECT_FALSE(is_parsed(parse_grade("0/0", 0)));
}

// Random responses stitched from fragments that exercise every rule and
// boundary, compared field by field with the oracle.
TEST(GradeParser, RandomResponsesAgreeWithOracle) {
  const std::vector<std::string> fragments = {
      "9",   "10",  "7.5", "8.25", "0",    "-",    "/",      " / ",  "/10", "/9",
      "/4",  " ",   "\n",  "\n\n", "\t",   ".",    ",",      ":",    ")",   "!",
      "a",   "x2",  "_",   "**",   "#",    "> ",   "`",      "%",    "Grade", "grade",
      "SCORE", "score", ": ", "**Grade:** ", "points", "The student", "out of", "1.",
      "10.0", "4",  "3",   "abc",  "\r\n", "Score:", "Grade:", "2023", "0.5", "12"};
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<std::size_t> pick(0, fragments.size() - 1);
  std::uniform_int_distribution<int> len(1, 12);
  const int maxes[] = {4, 6, 9, 10};
  for (int iter = 0; iter < 20000; ++iter) {
    std::string text;
    for (int k = len(rng); k > 0; --k) text += fragments[pick(rng)];
    expect_agrees_with_oracle(text, maxes[iter % 4]);
    if (::testing::Test::HasFatalFailure()) return;
  }
}

}  // namespace
}  // namespace grader
