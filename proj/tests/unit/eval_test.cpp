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

#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "grader/core/hash.hpp"
#include "grader/error.hpp"
#include "grader/eval/alignment.hpp"
#include "grader/eval/bootstrap.hpp"
#include "grader/eval/format.hpp"
#include "grader/eval/median.hpp"
#include "grader/eval/rng.hpp"
#include "grader/eval/samples.hpp"

namespace grader {
namespace {

GradeSample sample_of(std::vector<double> scores, std::string qid = "q1",
                      GradeSource source = GradeSource::instructor()) {
  GradeSample s{std::move(qid), std::move(source), {}};
  for (std::size_t i = 0; i < scores.size(); ++i) {
    char id[8];
    std::snprintf(id, sizeof id, "s%02zu", i + 1);
    s.values.emplace_back(id, scores[i]);
  }
  return s;
}

// Exact bootstrap distribution: every one of the n^n ordered resamples is
// equally likely.
struct Exact {
  double mean;
  double std;
};

Exact exhaustive_bootstrap(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= n;
  std::vector<double> means;
  for (std::size_t code = 0; code < total; ++code) {
    double sum = 0;
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      sum += x[c % n];
      c /= n;
    }
    means.push_back(sum / static_cast<double>(n));
  }
  double m = 0;
  for (double v : means) m += v;
  m /= static_cast<double>(total);
  double acc = 0;
  for (double v : means) acc += (v - m) * (v - m);
  return {m, std::sqrt(acc / static_cast<double>(total))};
}

TEST(Median, OddEvenAndUnsorted) {
  const std::vector<double> odd{4, 1, 3};
  EXPECT_EQ(peer_median(odd), 3.0);
  const std::vector<double> even{2, 9, 3, 1};
  EXPECT_EQ(peer_median(even), 2.5);
  const std::vector<double> one{7};
  EXPECT_EQ(peer_median(one), 7.0);
  try {
    peer_median(std::vector<double>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyScores);
  }
}

TEST(Rng, SplitmixAndCellSeed) {
  // First output of the reference SplitMix64 generator seeded with 0.
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(cell_seed(42, "q2", "peer"), splitmix64(42 ^ fnv1a64(std::string("q2\x1fpeer"))));
  EXPECT_NE(cell_seed(42, "q2", "peer"), cell_seed(43, "q2", "peer"));
  EXPECT_NE(cell_seed(0, "q1", "0q"), cell_seed(0, "q10", "q"));
}

TEST(Rng, UniformIndexStaysInRangeAndCoversIt) {
  std::mt19937_64 engine(5);
  for (std::uint64_t bound : {1ULL, 2ULL, 3ULL, 7ULL, 10ULL}) {
    std::vector<int> hits(bound);
    for (int i = 0; i < 20000; ++i) {
      auto v = uniform_index(engine, bound);
      ASSERT_LT(v, bound);
      ++hits[v];
    }
    const double expect = 20000.0 / static_cast<double>(bound);
    for (int h : hits) EXPECT_NEAR(h, expect, 0.1 * expect);
  }
}

TEST(Bootstrap, ZeroOneHasKnownMoments) {
  const auto exact = exhaustive_bootstrap({0, 1});
  EXPECT_DOUBLE_EQ(exact.mean, 0.5);
  EXPECT_DOUBLE_EQ(exact.std, std::sqrt(0.125));
  const auto s = bootstrap_summary(sample_of({0, 1}), 10000, 11);
  EXPECT_NEAR(s.mean_of_means, 0.5, 0.02);
  EXPECT_NEAR(s.std_of_means, std::sqrt(0.125), 0.02);
}

// Monte Carlo at 10k resamples lands within 0.02 of exact enumeration for
// samples on a unit scale (Monte Carlo standard error <= 0.005).
TEST(Bootstrap, AgreesWithExhaustiveEnumerationForSmallSamples) {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    std::vector<double> x;
    for (std::size_t i = 0; i < n; ++i) x.push_back(static_cast<double>(rng() % 11) / 10.0);
    const auto exact = exhaustive_bootstrap(x);
    const auto mc = bootstrap_summary(sample_of(x), 10000, rng());
    SCOPED_TRACE(::testing::Message() << "trial " << trial << " n " << n);
    EXPECT_NEAR(mc.mean_of_means, exact.mean, 0.02);
    EXPECT_NEAR(mc.std_of_means, exact.std, 0.02);
  }
}

// Wider score ranges: the error scales with the spread, so allow four
// standard errors of the Monte Carlo estimate.
TEST(Bootstrap, AgreesWithExhaustiveEnumerationOnGradeScales) {
  std::mt19937 rng(4321);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    std::vector<double> x;
    for (std::size_t i = 0; i < n; ++i) x.push_back(static_cast<double>(rng() % 21) / 2.0);
    const auto exact = exhaustive_bootstrap(x);
    const auto mc = bootstrap_summary(sample_of(x), 10000, rng());
    const double se = exact.std / std::sqrt(10000.0);
    SCOPED_TRACE(::testing::Message() << "trial " << trial << " n " << n);
    EXPECT_NEAR(mc.mean_of_means, exact.mean, 4 * se + 1e-12);
    EXPECT_NEAR(mc.std_of_means, exact.std, 4 * se + 1e-12);
  }
}

// For any n the exact bootstrap std of the mean is the population sd / sqrt(n).
TEST(Bootstrap, ConvergesToAnalyticStdForLargerSamples) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> x;
    for (int i = 0; i < 10; ++i) x.push_back(static_cast<double>(rng() % 11));
    const auto sample = sample_of(x);
    const auto s = bootstrap_summary(sample, 20000, trial);
    EXPECT_NEAR(s.mean_of_means, sample.mean(), 0.02);
    EXPECT_NEAR(s.std_of_means, sample.population_sd() / std::sqrt(10.0), 0.02);
  }
}

TEST(Bootstrap, ConstantSampleHasExactlyZeroStd) {
  const auto s = bootstrap_summary(sample_of(std::vector<double>(10, 2.0)), 10000, 9);
  EXPECT_EQ(s.mean_of_means, 2.0);
  EXPECT_EQ(s.std_of_means, 0.0);
  EXPECT_EQ(format_mean_std(s.mean_of_means, s.std_of_means), "2.00 ± 0.00");
}

TEST(Bootstrap, DeterministicAndOrderIndependent) {
  auto s = sample_of({3, 1, 4, 1, 5, 9, 2, 6});
  const auto a = bootstrap_summary(s, 5000, 1);
  const auto b = bootstrap_summary(s, 5000, 1);
  EXPECT_EQ(a.mean_of_means, b.mean_of_means);
  EXPECT_EQ(a.std_of_means, b.std_of_means);
  std::mt19937 rng(2);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(s.values.begin(), s.values.end(), rng);
    const auto c = bootstrap_summary(s, 5000, 1);
    EXPECT_EQ(c.mean_of_means, a.mean_of_means);
    EXPECT_EQ(c.std_of_means, a.std_of_means);
  }
  EXPECT_NE(bootstrap_summary(s, 5000, 2).mean_of_means, a.mean_of_means);
}

TEST(Bootstrap, RejectsEmptySampleAndBadResampleCount) {
  try {
    bootstrap_summary(sample_of({}), 10, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptySample);
  }
  try {
    bootstrap_summary(sample_of({1}), 0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidSample);
  }
}

TEST(Bootstrap, ThreadCountDoesNotChangeResults) {
  std::vector<GradeSample> samples;
  std::mt19937 rng(8);
  for (int q = 0; q < 6; ++q) {
    for (Strategy s : kAllStrategies) {
      std::vector<double> x;
      for (int i = 0; i < 10; ++i) x.push_back(static_cast<double>(rng() % 10));
      samples.push_back(sample_of(x, "q" + std::to_string(q), GradeSource::llm(s, "m")));
    }
  }
  const auto one = bootstrap_all(samples, 2000, 5, 1);
  const auto many = bootstrap_all(samples, 2000, 5, 4);
  ASSERT_EQ(one.size(), many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].mean_of_means, many[i].mean_of_means);
    EXPECT_EQ(one[i].std_of_means, many[i].std_of_means);
    EXPECT_EQ(one[i].seed, cell_seed(5, samples[i].question_id, samples[i].source.key()));
  }
}

TEST(Format, RoundsHalfAwayFromZero) {
  EXPECT_EQ(format_points(2.0), "2.00");
  EXPECT_EQ(format_points(2.675), "2.68");
  EXPECT_EQ(format_points(1.005), "1.01");
  EXPECT_EQ(format_points(-1.005), "-1.01");
  EXPECT_EQ(format_points(0.125), "0.13");
  EXPECT_EQ(format_points(8.444999), "8.44");
  EXPECT_EQ(format_points(9.995), "10.00");
  EXPECT_EQ(format_points(-0.001), "0.00");
  EXPECT_EQ(format_points(-0.0), "0.00");
  EXPECT_EQ(format_points(std::sqrt(0.125)), "0.35");
  EXPECT_EQ(format_mean_std(6.45, 0.0), "6.45 ± 0.00");
}

TEST(Format, ExactTextRoundTrips) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 1000; ++i) {
    const double v = std::ldexp(static_cast<double>(rng() >> 11), -50);
    EXPECT_EQ(std::stod(format_exact(v)), v);
  }
  EXPECT_EQ(format_exact(0.1), "0.1");
}

TEST(Format, SummariesCsvRoundTrip) {
  std::vector<BootstrapSummary> rows{
      {"q1", GradeSource::instructor(), 10, 10000, 123456789012345ULL, 6.45, 0.0},
      {"q,2", GradeSource::llm(Strategy::kAnswersOnly, "model \"x\", v2"), 10, 500, 0,
       1.0 / 3.0, 0.1234567890123},
      {"q3", GradeSource::peer_median(), 4, 1, ~0ULL, 2.5, 1e-17}};
  std::stringstream buf;
  write_summaries_csv(buf, rows);
  EXPECT_EQ(buf.str().substr(0, buf.str().find('\n')), "question,source,n,resamples,seed,mean,std");
  const auto back = read_summaries_csv(buf);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(back[i].question_id, rows[i].question_id);
    EXPECT_EQ(back[i].source, rows[i].source);
    EXPECT_EQ(back[i].n, rows[i].n);
    EXPECT_EQ(back[i].resamples, rows[i].resamples);
    EXPECT_EQ(back[i].seed, rows[i].seed);
    EXPECT_EQ(back[i].mean_of_means, rows[i].mean_of_means);
    EXPECT_EQ(back[i].std_of_means, rows[i].std_of_means);
  }
}

TEST(Format, SummariesCsvErrorsNameTheLine) {
  std::stringstream buf("question,source,n,resamples,seed,mean,std\nq1,instructor,ten,1,0,1,0\n");
  try {
    read_summaries_csv(buf);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSchemaError);
    EXPECT_NE(e.detail().find("summaries.csv:2"), std::string::npos) << e.detail();
  }
  std::stringstream bad_header("q,s\n");
  EXPECT_THROW(read_summaries_csv(bad_header), Error);
}

Course two_question_course() {
  Course c{"c", "C", {}};
  c.questions.push_back(Question{"q1", "t", 10, "a", std::nullopt});
  c.questions.push_back(Question{"q2", "t", 4, "a", std::nullopt});
  return c;
}

TEST(Samples, GroupsAndOrders) {
  const auto course = two_question_course();
  const std::vector<GradeRecord> records{
      {"s02", "q2", GradeSource::llm(Strategy::kAnswersOnly, "b"), 3, {}, {}, {}},
      {"s01", "q2", GradeSource::llm(Strategy::kAnswersOnly, "b"), 1, {}, {}, {}},
      {"s01", "q1", GradeSource::peer_median(), 9, {}, {}, {}},
      {"s01", "q1", GradeSource::instructor(), 8, {}, {}, {}},
      {"s01", "q1", GradeSource::peer_raw(0), 2, {}, {}, {}},
      {"s01", "q2", GradeSource::llm(Strategy::kAnswersOnly, "a"), 4, {}, {}, {}},
  };
  const auto samples = build_samples(course, records);
  ASSERT_EQ(samples.size(), 4u);
  EXPECT_EQ(samples[0].source, GradeSource::instructor());
  EXPECT_EQ(samples[1].source, GradeSource::peer_median());
  EXPECT_EQ(samples[2].source.model_id, "a");
  EXPECT_EQ(samples[3].source.model_id, "b");
  EXPECT_EQ(samples[3].values[0].first, "s01");
  EXPECT_EQ(samples[3].mean(), 2.0);
  EXPECT_EQ(samples[3].population_sd(), 1.0);
}

TEST(Samples, RejectsBadRecords) {
  const auto course = two_question_course();
  auto code = [&](std::vector<GradeRecord> records) {
    try {
      build_samples(course, records);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIoError;
  };
  const GradeRecord ok{"s01", "q2", GradeSource::instructor(), 4, {}, {}, {}};
  auto unknown = ok;
  unknown.question_id = "q9";
  auto high = ok;
  high.score = 4.5;
  auto low = ok;
  low.score = -0.5;
  EXPECT_EQ(code({unknown}), ErrorCode::kInvalidSample);
  EXPECT_EQ(code({high}), ErrorCode::kInvalidSample);
  EXPECT_EQ(code({low}), ErrorCode::kInvalidSample);
  EXPECT_EQ(code({ok, ok}), ErrorCode::kInvalidSample);
}

TEST(Samples, PeerMediansFromRawRecords) {
  const std::vector<GradeRecord> records{
      {"s01", "q1", GradeSource::peer_raw(0), 6, {}, {}, {}},
      {"s01", "q1", GradeSource::peer_raw(1), 9, {}, {}, {}},
      {"s01", "q1", GradeSource::peer_raw(2), 7, {}, {}, {}},
      {"s01", "q1", GradeSource::peer_raw(3), 8, {}, {}, {}},
      {"s02", "q1", GradeSource::peer_raw(0), 5, {}, {}, {}},
      {"s02", "q1", GradeSource::instructor(), 1, {}, {}, {}},
  };
  const auto medians = aggregate_peer_medians(records);
  ASSERT_EQ(medians.size(), 2u);
  EXPECT_EQ(medians[0].student_id, "s01");
  EXPECT_EQ(medians[0].score, 7.5);
  EXPECT_EQ(medians[0].source, GradeSource::peer_median());
  EXPECT_EQ(medians[1].score, 5.0);
}

std::vector<GradeSample> alignment_fixture(double shift) {
  auto llm = [](Strategy s) { return GradeSource::llm(s, "m"); };
  return {
      sample_of({5 + shift, 7 + shift}, "q1", GradeSource::instructor()),
      sample_of({7 + shift, 7 + shift}, "q1", GradeSource::peer_median()),
      sample_of({6.5 + shift, 6.5 + shift}, "q1", llm(Strategy::kAnswersOnly)),
      sample_of({5 + shift, 5 + shift}, "q1", llm(Strategy::kAnswersAndInstructorRubric)),
      sample_of({6 + shift, 6 + shift}, "q1", llm(Strategy::kAnswersAndLlmRubric)),
      sample_of({2 + shift}, "q2", GradeSource::instructor()),
      sample_of({3 + shift}, "q2", GradeSource::peer_median()),
      sample_of({1 + shift}, "q2", llm(Strategy::kAnswersOnly)),
  };
}

TEST(Alignment, DeviationsAndCompetitionRanks) {
  const auto report = alignment_report(alignment_fixture(0), {});
  const auto& t = report.raw;
  EXPECT_FALSE(report.resampled.has_value());
  auto cell = [&](const char* q, GradeSource s) { return t.find(q, s); };
  const auto llm = [](Strategy s) { return GradeSource::llm(s, "m"); };
  ASSERT_NE(cell("q1", GradeSource::instructor()), nullptr);
  EXPECT_EQ(cell("q1", GradeSource::instructor())->rank, 0);
  EXPECT_EQ(cell("q1", GradeSource::instructor())->deviation, 0.0);
  // Instructor mean 6: peer 1, answers-only 0.5, answers+rubric 1, llm rubric 0.
  EXPECT_EQ(cell("q1", GradeSource::peer_median())->deviation, 1.0);
  EXPECT_EQ(cell("q1", llm(Strategy::kAnswersAndLlmRubric))->rank, 1);
  EXPECT_EQ(cell("q1", llm(Strategy::kAnswersOnly))->rank, 2);
  EXPECT_EQ(cell("q1", GradeSource::peer_median())->rank, 3);
  EXPECT_EQ(cell("q1", llm(Strategy::kAnswersAndInstructorRubric))->rank, 3);
  // q2: peer and answers-only both 1 away.
  EXPECT_EQ(cell("q2", GradeSource::peer_median())->rank, 1);
  EXPECT_EQ(cell("q2", llm(Strategy::kAnswersOnly))->rank, 1);
  EXPECT_EQ(cell("q2", llm(Strategy::kAnswersAndLlmRubric)), nullptr);

  const auto* peer = t.find(GradeSource::peer_median());
  ASSERT_NE(peer, nullptr);
  EXPECT_EQ(peer->questions, 2u);
  EXPECT_EQ(peer->mean_abs_deviation, 1.0);
  EXPECT_EQ(t.find(llm(Strategy::kAnswersOnly))->mean_abs_deviation, 0.75);
  EXPECT_EQ(t.find(llm(Strategy::kAnswersAndLlmRubric))->questions, 1u);
  EXPECT_EQ(t.find(GradeSource::instructor()), nullptr);
}

// Adding the same constant to every score leaves deviations and ranks alone.
TEST(Alignment, ShiftInvariance) {
  const auto base = alignment_report(alignment_fixture(0), {}).raw;
  for (double shift : {0.5, 1.0, 3.25}) {
    const auto moved = alignment_report(alignment_fixture(shift), {}).raw;
    ASSERT_EQ(moved.cells.size(), base.cells.size());
    for (std::size_t i = 0; i < base.cells.size(); ++i) {
      EXPECT_EQ(moved.cells[i].source, base.cells[i].source);
      EXPECT_NEAR(moved.cells[i].deviation, base.cells[i].deviation, 1e-12);
      EXPECT_EQ(moved.cells[i].rank, base.cells[i].rank);
    }
  }
}

TEST(Alignment, UsesBootstrapMeansWhenGiven) {
  const auto samples = alignment_fixture(0);
  const auto summaries = bootstrap_all(samples, 1000, 3);
  const auto report = alignment_report(samples, summaries);
  ASSERT_TRUE(report.resampled.has_value());
  const auto* cell = report.resampled->find("q1", GradeSource::peer_median());
  ASSERT_NE(cell, nullptr);
  EXPECT_EQ(cell->mean, summaries[1].mean_of_means);
  EXPECT_EQ(cell->instructor_mean, summaries[0].mean_of_means);
}

TEST(Alignment, MissingInstructorIsAnError) {
  auto samples = alignment_fixture(0);
  samples.erase(samples.begin() + 5);  // q2 instructor
  try {
    alignment_report(samples, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingInstructorSample);
  }
}

}  // namespace
}  // namespace grader
