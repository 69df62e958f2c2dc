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

#include "grader/core/hash.hpp"
#include "grader/core/json_io.hpp"
#include "grader/core/validate.hpp"

namespace grader {
namespace {

using nlohmann::json;

Question question(std::string id, int max_points) {
  Rubric r{id, {{"All of it", {{max_points, "complete"}, {0, "missing"}}}}, RubricSource::kInstructor};
  return Question{std::move(id), "Explain.", max_points, "Because.", r};
}

bool has_finding(const std::vector<Finding>& fs, const std::string& path) {
  for (const auto& f : fs) {
    if (f.path == path) return true;
  }
  return false;
}

TEST(Model, StrategyNames) {
  for (Strategy s : kAllStrategies) {
    EXPECT_EQ(strategy_from_cli_name(to_cli_name(s)), s);
  }
  EXPECT_EQ(to_cli_name(Strategy::kAnswersAndLlmRubric), "answers+llm-rubric");
  EXPECT_FALSE(strategy_from_cli_name("rubric").has_value());
  EXPECT_FALSE(requires_rubric(Strategy::kAnswersOnly));
  EXPECT_TRUE(requires_rubric(Strategy::kAnswersAndInstructorRubric));
  EXPECT_TRUE(requires_rubric(Strategy::kAnswersAndLlmRubric));
}

TEST(Model, SourceKeysRoundTrip) {
  const std::vector<GradeSource> sources = {
      GradeSource::instructor(), GradeSource::peer_median(), GradeSource::peer_raw(2),
      GradeSource::llm(Strategy::kAnswersOnly, "gpt-4-0613"),
      GradeSource::llm(Strategy::kAnswersAndLlmRubric, "gpt-3.5-turbo-0613")};
  EXPECT_EQ(sources[0].key(), "instructor");
  EXPECT_EQ(sources[1].key(), "peer");
  EXPECT_EQ(sources[2].key(), "peer-raw/2");
  EXPECT_EQ(sources[3].key(), "gpt-4-0613/answers");
  for (const auto& s : sources) EXPECT_EQ(GradeSource::from_key(s.key()), s) << s.key();
  EXPECT_FALSE(GradeSource::from_key("gpt-4/rubric").has_value());
  EXPECT_FALSE(GradeSource::from_key("peer-raw/x").has_value());
  EXPECT_FALSE(GradeSource::from_key("").has_value());
}

TEST(Model, RubricMaxAttainable) {
  Rubric r{"q", {{"a", {{1, ""}, {3, ""}}}, {"b", {}}, {"c", {{2, ""}}}}, RubricSource::kInstructor};
  EXPECT_EQ(r.items[0].max_points(), 3);
  EXPECT_EQ(r.items[1].max_points(), 0);
  EXPECT_EQ(r.max_attainable(), 5);
}

TEST(Model, CourseLookup) {
  Course c{"c", "C", {question("q1", 2), question("q2", 3)}};
  EXPECT_EQ(c.find_question("q2")->max_points, 3);
  EXPECT_EQ(c.find_question("q3"), nullptr);
  EXPECT_EQ(c.question_number("q2"), 2u);
  EXPECT_EQ(c.question_number("zz"), 0u);
  EXPECT_TRUE((Submission{"s", "q", " \n\t"}.is_empty()));
  EXPECT_FALSE((Submission{"s", "q", " a"}.is_empty()));
}

TEST(Validate, GoodCourseHasNoFindings) {
  Course c{"c", "C", {question("q1", 2), question("q2", 3)}};
  EXPECT_TRUE(validate_course(c).empty());
  c.questions[1].instructor_rubric.reset();
  EXPECT_TRUE(validate_course(c).empty());
}

TEST(Validate, FindingsNameTheField) {
  Course c{"", "C", {question("q1", 2), question("q1", 0)}};
  c.questions[0].correct_answer = " ";
  c.questions[0].instructor_rubric->items[0].options[0].points = 5;
  const auto fs = validate_course(c);
  EXPECT_TRUE(has_finding(fs, "id"));
  EXPECT_TRUE(has_finding(fs, "questions[q1].correct_answer"));
  EXPECT_TRUE(has_finding(fs, "questions[q1].rubric"));
  EXPECT_TRUE(has_finding(fs, "questions[q1].id"));
  EXPECT_TRUE(has_finding(fs, "questions[q1].max_points"));

  EXPECT_TRUE(has_finding(validate_course(Course{"c", "C", {}}), "questions"));
}

TEST(Validate, RubricChecks) {
  const Question q = question("q1", 4);
  Rubric r{"q2", {{"a", {}}, {"b", {{-1, ""}, {4, ""}}}}, RubricSource::kInstructor};
  const auto fs = validate_rubric(r, q, "r");
  EXPECT_TRUE(has_finding(fs, "r.question_id"));
  EXPECT_TRUE(has_finding(fs, "r.items[0]"));
  EXPECT_TRUE(has_finding(fs, "r.items[1].options[0]"));
  EXPECT_FALSE(has_finding(fs, "r"));  // best case is 4

  Course c{"c", "C", {q}};
  c.questions[0].instructor_rubric->source = RubricSource::kLlmGenerated;
  EXPECT_TRUE(has_finding(validate_course(c), "questions[q1].rubric.source"));
}

TEST(JsonIo, CourseRoundTrip) {
  Course c{"astro", "Astronomy", {question("q1", 2), question("q2", 3)}};
  c.questions[1].instructor_rubric.reset();
  const json j = c;
  EXPECT_FALSE(j["questions"][1].contains("rubric"));
  EXPECT_EQ(j["questions"][0]["rubric"]["source"], "instructor");
  EXPECT_EQ(j.get<Course>(), c);
  EXPECT_EQ(json::parse(j.dump()).get<Course>(), c);
}

TEST(JsonIo, GradeRecordRoundTrip) {
  GradeRecord r{"s01", "q1", GradeSource::llm(Strategy::kAnswersAndInstructorRubric, "m"), 7.5,
                "ok", "7.5/10 ok", "run-1"};
  const json j = r;
  EXPECT_EQ(j["source"]["strategy"], "answers+rubric");
  EXPECT_EQ(j.get<GradeRecord>(), r);
  GradeRecord bare{"s01", "q1", GradeSource::peer_raw(0), 3, {}, {}, {}};
  EXPECT_EQ(json(bare).get<GradeRecord>(), bare);
}

TEST(JsonIo, MalformedInputThrows) {
  EXPECT_THROW(json::parse(R"({"id":"q","text":"t","max_points":"3","correct_answer":"a"})")
                   .get<Question>(),
               json::exception);
  EXPECT_THROW(json::parse(R"({"kind":"robot"})").get<GradeSource>(), json::exception);
  EXPECT_THROW(json::parse(R"({"kind":"llm","model":"m","strategy":"zzz"})").get<GradeSource>(),
               json::exception);
  EXPECT_THROW(json::parse(R"({"question_id":"q","source":"other","items":[]})").get<Rubric>(),
               json::exception);
}

// Random records survive a JSON round trip unchanged.
TEST(JsonIo, RandomGradeRecordsRoundTrip) {
  std::mt19937 rng(3);
  const std::vector<std::string> pieces{"a", "b", " ", "\n", "\"", "\\", "/", "{", "}", "\xc3\xa9", "\t", "0"};
  auto random_text = [&] {
    std::string s;
    for (int k = static_cast<int>(rng() % 12); k > 0; --k) s += pieces[rng() % pieces.size()];
    return s;
  };
  for (int i = 0; i < 500; ++i) {
    GradeRecord r;
    r.student_id = "s" + std::to_string(rng() % 100);
    r.question_id = "q" + std::to_string(rng() % 10);
    switch (rng() % 4) {
      case 0: r.source = GradeSource::instructor(); break;
      case 1: r.source = GradeSource::peer_median(); break;
      case 2: r.source = GradeSource::peer_raw(static_cast<int>(rng() % 5)); break;
      default: r.source = GradeSource::llm(kAllStrategies[rng() % 3], random_text()); break;
    }
    r.score = static_cast<double>(rng() % 101) / 10.0;
    if (rng() % 2) r.rationale = random_text();
    if (rng() % 2) r.raw_response = random_text();
    if (rng() % 2) r.run_id = random_text();
    const auto text = json(r).dump();
    EXPECT_EQ(json::parse(text).get<GradeRecord>(), r) << text;
  }
}

TEST(Hash, Fnv1aKnownValues) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(to_hex64(0xabcULL), "0000000000000abc");
}

}  // namespace
}  // namespace grader
