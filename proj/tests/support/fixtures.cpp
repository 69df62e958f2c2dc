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

#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "grader/core/json_io.hpp"

namespace grader::testing {
namespace {

using nlohmann::json;

struct QuestionText {
  const char* text;
  const char* answer;
};

// Synthetic question and model-answer text, one list per course.
const std::map<std::string, std::vector<QuestionText>>& question_texts() {
  static const std::map<std::string, std::vector<QuestionText>> texts{
      {"astronomy",
       {{"Explain why the Moon shows phases. Describe the positions of the Sun, Earth and Moon "
         "at new moon and at full moon.",
         "Half of the Moon is always lit by the Sun. Phases appear because we see different "
         "fractions of the lit half as the Moon orbits Earth. At new moon the Moon lies between "
         "Earth and the Sun; at full moon Earth lies between the Sun and the Moon."},
        {"A star shows a parallax angle of 0.1 arcseconds. Compute its distance and explain why "
         "parallax cannot be used for very distant stars.",
         "Distance in parsecs is 1 divided by the parallax in arcseconds, so the star is 10 "
         "parsecs away. Parallax angles shrink with distance and become too small to measure "
         "against the blurring of the atmosphere and instrument limits."},
        {"Describe how the spectrum of a star reveals its surface temperature and composition.",
         "The peak wavelength of the continuous spectrum shifts to shorter wavelengths for "
         "hotter stars (Wien's law). Absorption lines at fixed wavelengths identify the elements "
         "in the stellar atmosphere."},
        {"Compare the final stages of a one-solar-mass star with those of a twenty-solar-mass "
         "star.",
         "A one-solar-mass star becomes a red giant, sheds a planetary nebula and leaves a white "
         "dwarf. A twenty-solar-mass star fuses elements up to iron, explodes as a core-collapse "
         "supernova and leaves a neutron star or black hole."},
        {"Use the redshifts of distant galaxies to explain the evidence for an expanding "
         "universe.",
         "Distant galaxies show redshifts that grow with distance (Hubble's law). Recession "
         "speed proportional to distance is what uniform expansion of space predicts."}}},
      {"astrobiology",
       {{"Two stars are observed with different techniques. Identify each technique, explain "
         "what it measures, and decide which planet is more likely to be habitable.",
         "Periodic dimming of the starlight reveals a transit and gives the planet's radius. A "
         "periodic Doppler shift of the star's lines reveals the planet's pull and gives its "
         "period and a minimum mass. The planet with the longer period and Earth-like radius "
         "ratio is the better candidate."},
        {"Evaluate two classmates' claims about where liquid water can exist around M-dwarf "
         "stars, using the habitable zone concept.",
         "The habitable zone of a cool M dwarf lies much closer to the star than for the Sun. "
         "Planets there can hold liquid water but are likely tidally locked and exposed to "
         "flares, which both claims must account for."},
        {"Explain how the Miller-Urey experiment informs our ideas about the origin of life and "
         "name one limitation.",
         "Sparking a mixture of reducing gases produced amino acids, showing that building "
         "blocks of life can form abiotically. A limitation is that the early atmosphere was "
         "probably less reducing than the mixture used."}}},
      {"hpa",
       {{"Describe one argument the ancient Greeks used to conclude that Earth is spherical.",
         "The shadow of Earth on the Moon during lunar eclipses is always curved, which only a "
         "sphere casts from every direction."},
        {"Why did the heliocentric model not immediately win over the geocentric model?",
         "Without stellar parallax and with circular orbits, the heliocentric model predicted "
         "positions no better than the geocentric one, and it conflicted with accepted physics."},
        {"Imagine you are Galileo writing to a skeptic. Which telescopic observation would you "
         "present first, and why?",
         "The phases of Venus, since a full cycle of phases is impossible in the Ptolemaic "
         "arrangement but expected when Venus orbits the Sun."},
        {"What role did Kepler's use of Tycho Brahe's data play in the history of astronomy?",
         "Tycho's precise observations of Mars let Kepler rule out circular orbits and arrive at "
         "elliptical orbits, turning astronomy toward data-driven physical laws."}}},
  };
  return texts;
}

const char* kCriteria[] = {"Identifies the key concept", "Explains the mechanism",
                           "Uses evidence or data", "Reaches a correct conclusion",
                           "Writes clearly"};

std::vector<int> split_points(int max_points, bool generated) {
  switch (max_points) {
    case 4: return generated ? std::vector<int>{1, 1, 1, 1} : std::vector<int>{2, 1, 1};
    case 6: return generated ? std::vector<int>{2, 2, 1, 1} : std::vector<int>{2, 2, 2};
    case 9: return generated ? std::vector<int>{3, 2, 2, 2} : std::vector<int>{3, 3, 2, 1};
    case 10: return {2, 2, 2, 2, 2};
    default: return {max_points};
  }
}

Rubric instructor_rubric(const std::string& question_id, int max_points) {
  Rubric r;
  r.question_id = question_id;
  r.source = RubricSource::kInstructor;
  const auto parts = split_points(max_points, false);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    RubricItem item;
    item.criterion = kCriteria[i % std::size(kCriteria)];
    item.options.push_back({parts[i], "complete and correct"});
    if (parts[i] > 1) item.options.push_back({parts[i] / 2, "partially correct"});
    item.options.push_back({0, "missing or incorrect"});
    r.items.push_back(std::move(item));
  }
  return r;
}

std::string generated_rubric_text(const Course& course) {
  std::string out;
  for (std::size_t q = 0; q < course.questions.size(); ++q) {
    if (q > 0) out += "\n\n";
    out += "Rubric for Question " + std::to_string(q + 1) + ":\n";
    const auto parts = split_points(course.questions[q].max_points, true);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      out += "\n- " + std::string(kCriteria[i % std::size(kCriteria)]) + " (" +
             std::to_string(parts[i]) + (parts[i] == 1 ? " point" : " points") +
             "): awarded when this part of the answer matches the model answer.";
    }
  }
  return out;
}

std::string format_score(double score) {
  char buf[32];
  if (score == std::floor(score)) {
    std::snprintf(buf, sizeof buf, "%.0f", score);
  } else {
    std::snprintf(buf, sizeof buf, "%.1f", score);
  }
  return buf;
}

const char* kAnswerBodies[] = {
    "I think the main idea is covered in the lecture notes and I tried to apply it here.",
    "My reasoning starts from the definition and then works through the example step by step.",
    "The observations point to one explanation, although I am not fully sure about the details.",
    "Following the reading, the answer depends on two factors that I describe below.",
    "This was hard, but here is my best attempt using the data from the assignment.",
};

void write_text(const std::filesystem::path& file, const std::string& text) {
  std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + file.string());
}

}  // namespace

double ReferenceCourse::mean(std::size_t q, const GradeSource& source) const {
  const auto& row = rows.at(q);
  switch (source.kind) {
    case GradeSource::Kind::kInstructor: return row.instructor;
    case GradeSource::Kind::kPeerMedian: return row.peer;
    case GradeSource::Kind::kLlm: {
      const auto& cols = source.model_id == kGpt4 ? row.gpt4 : row.gpt35;
      return cols[static_cast<std::size_t>(source.strategy)];
    }
    default: throw std::invalid_argument("no reference column for " + source.key());
  }
}

const std::vector<ReferenceCourse>& reference_courses() {
  static const std::vector<ReferenceCourse> courses{
      {"astronomy",
       "Introductory Astronomy",
       {6, 9, 9, 9, 9},
       {{3.90, 5.15, {4.50, 2.90, 4.10}, {4.75, 4.40, 4.40}},
        {8.20, 7.55, {7.60, 8.30, 8.40}, {8.65, 8.30, 8.50}},
        {7.50, 7.40, {6.80, 7.20, 6.60}, {7.60, 7.30, 7.60}},
        {7.40, 7.45, {6.80, 7.10, 6.80}, {7.50, 6.90, 7.05}},
        {5.50, 7.40, {6.40, 7.40, 6.40}, {6.20, 5.90, 6.35}}}},
      {"astrobiology",
       "Astrobiology",
       {10, 10, 10},
       {{6.80, 7.50, {7.40, 6.70, 6.58}, {7.50, 7.10, 7.10}},
        {6.70, 7.45, {7.00, 7.30, 5.52}, {7.90, 7.40, 7.10}},
        {7.90, 9.05, {6.70, 6.50, 5.02}, {8.10, 7.50, 7.50}}}},
      {"hpa",
       "History and Philosophy of Astronomy",
       {4, 4, 4, 4},
       {{3.50, 3.60, {2.70, 2.00, 2.85}, {3.50, 3.20, 3.20}},
        {2.40, 3.70, {2.90, 1.80, 2.56}, {3.25, 3.10, 2.95}},
        {2.70, 3.40, {2.70, 1.20, 1.70}, {3.65, 3.20, 3.20}},
        {2.20, 3.80, {3.00, 1.10, 2.20}, {3.25, 2.70, 2.95}}}},
  };
  return courses;
}

const ReferenceCourse& reference_course(const std::string& id) {
  for (const auto& c : reference_courses()) {
    if (c.id == id) return c;
  }
  throw std::invalid_argument("unknown course " + id);
}

std::vector<GradeSource> llm_sources() {
  std::vector<GradeSource> out;
  for (const char* model : {kGpt35, kGpt4}) {
    for (Strategy s : kAllStrategies) out.push_back(GradeSource::llm(s, model));
  }
  return out;
}

std::vector<double> scores_with_mean(double mean, int max_points, int n, bool spread) {
  const long total = std::lround(mean * n * 10.0);  // in tenths of a point
  const long unit = total % 10 == 0 ? 10 : total % 5 == 0 ? 5 : 1;
  const long units = total / unit;
  const long cap = max_points * 10L / unit;
  if (n < 1 || total < 0 || units > cap * n) {
    throw std::invalid_argument("mean not reachable");
  }
  std::vector<long> v(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) v[i] = units / n + (i < units % n ? 1 : 0);
  if (spread) {
    for (long k = 0; 2 * k + 1 < n; ++k) {
      long shift = ((k % 3) + 1) * 10 / unit;
      long& up = v[2 * k];
      long& down = v[2 * k + 1];
      shift = std::min({shift, down, cap - up});
      up += shift;
      down -= shift;
    }
    std::rotate(v.begin(), v.begin() + (total % n), v.end());
  }
  std::vector<double> out;
  for (long x : v) out.push_back(static_cast<double>(x * unit) / 10.0);
  return out;
}

std::vector<double> peers_for_median(double median, int max_points) {
  const double twice = median * 2.0;
  if (twice != std::floor(twice)) throw std::invalid_argument("median must be a multiple of 0.5");
  auto clamp = [&](double x) { return std::clamp(x, 0.0, static_cast<double>(max_points)); };
  if (median == std::floor(median)) {
    return {clamp(median - 1), median, clamp(median + 1)};
  }
  return {clamp(median - 1.5), median - 0.5, median + 0.5, clamp(median + 1.5)};
}

std::string student_id(int i) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "s%02d", i);
  return buf;
}

std::string answer_tag(const std::string& student, const std::string& question_id) {
  return "Submission " + student + " for " + question_id + ":";
}

std::string mock_grade_response(double score, int max_points, Strategy strategy) {
  const std::string grade = format_score(score) + "/" + std::to_string(max_points);
  switch (strategy) {
    case Strategy::kAnswersOnly:
      return grade + "\n\nThe student covers the main points of the correct answer. Points are "
                     "deducted for the parts that are missing or imprecise.";
    case Strategy::kAnswersAndInstructorRubric:
      return grade + "\n\nFollowing the rubric item by item, the student earns credit where the "
                     "answer matches the criterion and loses points where it does not.";
    case Strategy::kAnswersAndLlmRubric:
      return "Grade: " + grade +
             "\n\nEach rubric item was checked against the answer; deductions are noted above.";
  }
  return grade;
}

Fixture build_fixture(const ReferenceCourse& reference) {
  Fixture f;
  f.course.id = reference.id;
  f.course.name = reference.name;
  f.audience_line = "Most students taking " + reference.name +
                    " are adult learners without a science degree.";
  const auto& texts = question_texts().at(reference.id);
  for (std::size_t q = 0; q < reference.max_points.size(); ++q) {
    Question question;
    question.id = "q" + std::to_string(q + 1);
    question.text = texts.at(q).text;
    question.correct_answer = texts.at(q).answer;
    question.max_points = reference.max_points[q];
    question.instructor_rubric = instructor_rubric(question.id, question.max_points);
    f.course.questions.push_back(std::move(question));
  }

  for (int s = 1; s <= kStudents; ++s) {
    for (std::size_t q = 0; q < f.course.questions.size(); ++q) {
      const auto& qid = f.course.questions[q].id;
      const std::string sid = student_id(s);
      f.submissions.push_back(
          {sid, qid,
           answer_tag(sid, qid) + " " + kAnswerBodies[(s + q) % std::size(kAnswerBodies)]});
    }
  }

  for (std::size_t q = 0; q < f.course.questions.size(); ++q) {
    const Question& question = f.course.questions[q];
    const auto instructor =
        scores_with_mean(reference.rows[q].instructor, question.max_points, kStudents, true);
    const auto medians =
        scores_with_mean(reference.rows[q].peer, question.max_points, kStudents, true);
    for (int s = 0; s < kStudents; ++s) {
      const std::string sid = student_id(s + 1);
      f.human_grades.push_back({sid, question.id, GradeSource::instructor(), instructor[s], {}, {}, {}});
      const auto peers = peers_for_median(medians[s], question.max_points);
      for (std::size_t p = 0; p < peers.size(); ++p) {
        f.human_grades.push_back(
            {sid, question.id, GradeSource::peer_raw(static_cast<int>(p) + 1), peers[p], {}, {}, {}});
      }
    }
    for (const auto& source : llm_sources()) {
      // Kept constant so the bootstrap column shows a zero spread for this cell.
      const bool constant = reference.id == "hpa" && q == 0 && source.model_id == kGpt35 &&
                            source.strategy == Strategy::kAnswersAndInstructorRubric;
      const auto scores = scores_with_mean(reference.mean(q, source), question.max_points,
                                           kStudents, !constant);
      auto& ledger = f.llm_grades[source.key()];
      for (int s = 0; s < kStudents; ++s) {
        const auto response = mock_grade_response(scores[s], question.max_points, source.strategy);
        ledger.push_back({student_id(s + 1), question.id, source, scores[s], {}, response, {}});
      }
    }
  }
  f.rubric_response = generated_rubric_text(f.course);
  return f;
}

void write_bundle(const Fixture& fixture, const std::filesystem::path& dir) {
  json course = fixture.course;
  course["audience_line"] = fixture.audience_line;
  write_text(dir / "course.json", course.dump(2) + "\n");

  std::string submissions;
  for (const auto& s : fixture.submissions) submissions += json(s).dump() + "\n";
  write_text(dir / "submissions.jsonl", submissions);

  std::string grades;
  for (const auto& g : fixture.human_grades) grades += json(g).dump() + "\n";
  write_text(dir / "grades.jsonl", grades);

  json rubric_script{{"key_mode", "substring"},
                     {"entries",
                      {{{"key", "Your task is to design a rubric"},
                        {"response", fixture.rubric_response}}}}};
  write_text(dir / "mock" / "rubric.json", rubric_script.dump(2) + "\n");

  for (const auto& [key, records] : fixture.llm_grades) {
    json entries = json::array();
    for (const auto& r : records) {
      entries.push_back({{"key", answer_tag(r.student_id, r.question_id)},
                         {"response", *r.raw_response}});
    }
    json script{{"key_mode", "substring"}, {"entries", entries}};
    const auto& source = records.front().source;
    write_text(dir / "mock" /
                   (source.model_id + "__" + std::string(to_cli_name(source.strategy)) + ".json"),
               script.dump(2) + "\n");
  }
}

}  // namespace grader::testing
