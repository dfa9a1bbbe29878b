// Copyright 2026 The ATS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "ats/csv.h"
#include "ats/error.h"
#include "ats/evaluator.h"
#include "gtest/gtest.h"
#include "rouge_oracle.h"

namespace ats {
namespace {

using Tokens = std::vector<std::string>;

Tokens RandomTokens(std::mt19937_64& rng, std::size_t alphabet, std::size_t max_len) {
  Tokens out(rng() % (max_len + 1));
  for (auto& t : out) t = "w" + std::to_string(rng() % alphabet);
  return out;
}

void ExpectPrf(const RougeScore& s, double p, double r, double f) {
  EXPECT_NEAR(s.precision, p, 1e-12);
  EXPECT_NEAR(s.recall, r, 1e-12);
  EXPECT_NEAR(s.f, f, 1e-12);
}

TEST(Rouge, HandComputedExamples) {
  ExpectPrf(RougeN("a b c", "a b d", 1), 2.0 / 3, 2.0 / 3, 2.0 / 3);
  ExpectPrf(RougeN("a b c", "a b d", 2), 0.5, 0.5, 0.5);
  ExpectPrf(RougeL("a b c", "a b d"), 2.0 / 3, 2.0 / 3, 2.0 / 3);
  ExpectPrf(RougeL("x", "a b"), 0, 0, 0);
  ExpectPrf(RougeN("a a a", "a", 1), 1.0 / 3, 1.0, 0.5);
  ExpectPrf(RougeN("a", "a b", 2), 0, 0, 0);
  ExpectPrf(RougeN("p q", "r s", 1), 0, 0, 0);
  EXPECT_THROW(RougeN("a", "a", 3), std::invalid_argument);
}

TEST(Rouge, MatchesOraclesOnRandomPairs) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t alphabet = 1 + rng() % 10;
    const Tokens c = RandomTokens(rng, alphabet, 20);
    const Tokens r = RandomTokens(rng, alphabet, 20);
    for (int n : {1, 2}) {
      const auto got = RougeN(c, r, n);
      const auto want = oracle::BruteRougeN(c, r, static_cast<std::size_t>(n));
      ASSERT_NEAR(got.precision, want.p, 1e-12);
      ASSERT_NEAR(got.recall, want.r, 1e-12);
      ASSERT_NEAR(got.f, want.f, 1e-12);
    }
    const auto l = RougeL(c, r);
    const auto want = oracle::DpRougeL(c, r);
    ASSERT_NEAR(l.precision, want.p, 1e-12);
    ASSERT_NEAR(l.recall, want.r, 1e-12);
    ASSERT_NEAR(l.f, want.f, 1e-12);
  }
}

TEST(Rouge, Invariants) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 1000; ++t) {
    const Tokens c = RandomTokens(rng, 1 + rng() % 10, 25);
    const Tokens r = RandomTokens(rng, 1 + rng() % 10, 25);
    const RougeScore all[] = {RougeN(c, r, 1), RougeN(c, r, 2), RougeL(c, r)};
    for (const auto& s : all) {
      for (double v : {s.precision, s.recall, s.f}) {
        ASSERT_GE(v, 0.0);
        ASSERT_LE(v, 1.0);
      }
      ASSERT_NEAR(s.f * (s.precision + s.recall), 2 * s.precision * s.recall, 1e-12);
    }
    ASSERT_LE(oracle::DpLcs(c, r), std::min(c.size(), r.size()));
    if (!c.empty()) {
      ExpectPrf(RougeN(c, c, 1), 1, 1, 1);
      ExpectPrf(RougeL(c, c), 1, 1, 1);
      if (c.size() >= 2) ExpectPrf(RougeN(c, c, 2), 1, 1, 1);
    }
  }
}

TEST(EvaluateDocument, PerfectEmptyAndMissing) {
  const auto perfect = EvaluateDocument("ڕوسیا ولات هێز", "ڕوسیا ولات هێز");
  for (const auto& s : perfect) ExpectPrf(s, 1, 1, 1);
  const auto empty = EvaluateDocument("", "ڕوسیا ولات");
  for (const auto& s : empty) ExpectPrf(s, 0, 0, 0);
  try {
    EvaluateDocument("a", "  ");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingReference);
  }
}

DocumentScores WithF1(double f) {
  DocumentScores s{};
  for (RougeMetric m : kRougeMetrics) s[static_cast<std::size_t>(m)] = MakeRougeScore(m, f, f);
  return s;
}

TEST(Aggregate, MeanOfDepartmentMeans) {
  const std::vector<double> with = {0.1410, 0.1347, 0.1436, 0.1462};
  const std::vector<double> without = {0.1375, 0.1169, 0.1735, 0.1958};
  const std::vector<std::string> depts = {"a", "b", "c", "d"};
  for (const auto& [values, expect] : {std::pair{with, 0.141375}, std::pair{without, 0.155925}}) {
    std::vector<DocumentScores> scores;
    for (double f : values) scores.push_back(WithF1(f));
    const auto report = Aggregate(scores, depts);
    EXPECT_NEAR(report.average.scores[0].f, expect, 1e-12);
    EXPECT_EQ(FormatFixed6(report.average.scores[0].f), FormatFixed6(expect));
  }
  // Unequal department sizes: the overall row is not document-weighted.
  const auto report = Aggregate({WithF1(0.2), WithF1(0.4), WithF1(0.9)}, {"x", "x", "y"});
  ASSERT_EQ(report.departments.size(), 2u);
  EXPECT_NEAR(report.departments[0].scores[0].f, 0.3, 1e-12);
  EXPECT_NEAR(report.average.scores[0].f, 0.6, 1e-12);
  EXPECT_EQ(report.average.documents, 3u);
}

TEST(Aggregate, SingleDocumentIsItsOwnAverage) {
  const auto doc = EvaluateDocument("a b c e", "a b d");
  const auto report = Aggregate({doc}, {"only"});
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_DOUBLE_EQ(report.average.scores[k].precision, doc[k].precision);
    EXPECT_DOUBLE_EQ(report.average.scores[k].recall, doc[k].recall);
    EXPECT_DOUBLE_EQ(report.average.scores[k].f, doc[k].f);
  }
}

TEST(Aggregate, ThreeDepartmentOracle) {
  std::mt19937_64 rng(13);
  std::vector<DocumentScores> scores;
  std::vector<std::string> depts;
  std::map<std::string, std::vector<double>> recall;
  for (int i = 0; i < 30; ++i) {
    const std::string d = "dept" + std::to_string(rng() % 3);
    const Tokens c = RandomTokens(rng, 6, 15);
    const Tokens r = RandomTokens(rng, 6, 15);
    DocumentScores s = {RougeN(c, r, 1), RougeN(c, r, 2), RougeL(c, r)};
    scores.push_back(s);
    depts.push_back(d);
    recall[d].push_back(s[2].recall);
  }
  const auto report = Aggregate(scores, depts);
  double overall = 0;
  std::size_t row = 0;
  for (const auto& [d, values] : recall) {
    double mean = 0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    overall += mean;
    ASSERT_EQ(report.departments[row].department, d);
    EXPECT_NEAR(report.departments[row].scores[2].recall, mean, 1e-12);
    ++row;
  }
  EXPECT_NEAR(report.average.scores[2].recall, overall / static_cast<double>(recall.size()),
              1e-12);
}

TEST(Report, CsvLayouts) {
  const auto doc = EvaluateDocument("a b c", "a b d");
  EXPECT_EQ(RenderDocumentCsv(doc),
            "metric,precision,recall,f\nrouge1,0.666667,0.666667,0.666667\n"
            "rouge2,0.500000,0.500000,0.500000\nrougeL,0.666667,0.666667,0.666667\n");
  const auto report = Aggregate({doc, doc}, {"p", "q"});
  const auto rows = csv::Parse(RenderReportCsv(report));
  ASSERT_EQ(rows.size(), 1u + 3 * 3);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"metric", "department", "documents", "precision",
                                               "recall", "f"}));
  EXPECT_EQ(rows[1][0], "rouge1");
  EXPECT_EQ(rows[1][1], "p");
  EXPECT_EQ(rows[3][1], "Average");
  EXPECT_EQ(rows[3][2], "2");
  EXPECT_EQ(rows[9][0], "rougeL");
}

}  // namespace
}  // namespace ats
