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
#include <set>
#include <string>
#include <vector>

#include "ats/csv.h"
#include "ats/error.h"
#include "ats/file_util.h"
#include "ats/corpus.h"
#include "ats/summarizer.h"
#include "ats/utf8.h"
#include "gtest/gtest.h"
#include "synthetic.h"
#include "temp_dir.h"

namespace ats {
namespace {

using testing::TempDir;

void WriteDoc(const TempDir& root, const std::string& dept, const std::string& id,
              const std::string& body, const std::string* abstract, const std::string& meta = "") {
  const auto dir = root.path() / dept / id;
  std::filesystem::create_directories(dir);
  if (!body.empty()) WriteFile(dir / "body.txt", body);
  if (abstract != nullptr) WriteFile(dir / "abstract.txt", *abstract);
  if (!meta.empty()) WriteFile(dir / "conclusion.meta", meta);
}

TEST(LoadCorpus, WellFormedFixture) {
  TempDir root;
  const std::string abs = "کورتە";
  WriteDoc(root, "sociology", "d1", "یەک. دوو.", &abs, "conclusion 4 9\n");
  WriteDoc(root, "sociology", "d2", "سێ.", &abs);
  WriteDoc(root, "kurdish_language", "d3", "چوار.", &abs);
  const auto corpus = LoadCorpus(root.path());
  EXPECT_TRUE(corpus.issues.empty());
  ASSERT_EQ(corpus.documents.size(), 3u);
  EXPECT_EQ(corpus.documents[0].doc_id, "d3");
  EXPECT_EQ(corpus.documents[1].conclusion, (ConclusionSpan{4, 9}));
  EXPECT_FALSE(corpus.documents[2].conclusion.has_value());
}

TEST(LoadCorpus, RecordsIssuesAndSkips) {
  TempDir root;
  const std::string abs = "کورتە";
  WriteDoc(root, "sociology", "no_abstract", "دەق.", nullptr);
  WriteDoc(root, "sociology", "no_body", "", &abs);
  WriteDoc(root, "sociology", "bad_meta", "دەق.", &abs, "conclusion 3 99\n");
  WriteDoc(root, "sociology", "garbled_meta", "دەق.", &abs, "end 1\n");
  WriteDoc(root, "sociology", "ok", "دەق.", &abs);
  WriteDoc(root, "kurdish_language", "ok", "دەق.", &abs);
  const auto corpus = LoadCorpus(root.path());
  std::map<std::string, ErrorCode> issues;
  for (const auto& i : corpus.issues) issues[i.department + "/" + i.doc_id] = i.code;
  EXPECT_EQ(issues.at("sociology/no_abstract"), ErrorCode::kMissingAbstract);
  EXPECT_EQ(issues.at("sociology/no_body"), ErrorCode::kMissingBody);
  EXPECT_EQ(issues.at("sociology/bad_meta"), ErrorCode::kMalformedMeta);
  EXPECT_EQ(issues.at("sociology/garbled_meta"), ErrorCode::kMalformedMeta);
  ASSERT_EQ(corpus.documents.size(), 1u);
  EXPECT_EQ(corpus.issues.size(), 5u);
  bool duplicate = false;
  for (const auto& i : corpus.issues) duplicate |= i.code == ErrorCode::kDuplicateId;
  EXPECT_TRUE(duplicate);
}

TEST(ConclusionMeta, ParseAndRender) {
  EXPECT_EQ(ParseConclusionMeta("conclusion 10 20\n"), (ConclusionSpan{10, 20}));
  EXPECT_EQ(ParseConclusionMeta(RenderConclusionMeta({3, 8})), (ConclusionSpan{3, 8}));
  EXPECT_THROW(ParseConclusionMeta("conclusion 5 5"), Error);
  EXPECT_THROW(ParseConclusionMeta("conclusion -1 5"), Error);
  EXPECT_THROW(ParseConclusionMeta(""), Error);
}

TEST(StripConclusion, ReinsertionReconstructsBody) {
  std::mt19937_64 rng(3);
  synthetic::Generator gen(3);
  for (int t = 0; t < 200; ++t) {
    CorpusDocument doc;
    doc.body = gen.Text(40 + rng() % 60);
    const auto cps = utf8::ToCodepoints(doc.body);
    const std::size_t start = rng() % (cps.size() - 1);
    const std::size_t end = start + 1 + rng() % (cps.size() - start);
    doc.conclusion = ConclusionSpan{start, end};
    const CorpusDocument stripped = StripConclusion(doc);
    EXPECT_EQ(stripped.abstract, doc.abstract);
    EXPECT_FALSE(stripped.conclusion.has_value());
    const auto removed = utf8::FromCodepoints({cps.begin() + start, cps.begin() + end});
    const auto kept = utf8::ToCodepoints(stripped.body);
    const std::string rebuilt = utf8::FromCodepoints({kept.begin(), kept.begin() + start}) +
                                removed +
                                utf8::FromCodepoints({kept.begin() + start, kept.end()});
    ASSERT_EQ(rebuilt, doc.body);
  }
}

TEST(StripConclusion, MissingSpanPassesThroughCounted) {
  CorpusDocument doc;
  doc.body = "یەک دوو.";
  std::size_t missing = 0;
  EXPECT_EQ(StripConclusion(doc, &missing).body, doc.body);
  EXPECT_EQ(missing, 1u);
}

TEST(StripConclusion, RemovesExactlyTheSpanWords) {
  synthetic::Generator gen(5);
  CorpusDocument doc;
  doc.body = gen.Text(500);
  const std::string conclusion = gen.Text(200);
  ASSERT_EQ(WordCount(conclusion), 200u);
  const std::size_t start = utf8::Length(doc.body) + 1;
  doc.body += " " + conclusion;
  doc.conclusion = ConclusionSpan{start, utf8::Length(doc.body)};
  const auto stripped = StripConclusion(doc);
  EXPECT_EQ(WordCount(doc.body) - WordCount(stripped.body), 200u);
  EXPECT_EQ(stripped.body.find(conclusion), std::string::npos);
}

TEST(WordStats, MeansAndPublishedAverage) {
  EXPECT_NEAR(MeanOfMeans({{"a", 207.42}, {"b", 154.26}, {"c", 180.09}, {"d", 184.1}}), 181.4675,
              1e-9);
  std::vector<CorpusDocument> docs(2);
  docs[0].department = docs[1].department = "x";
  docs[0].abstract = "a b c d e f g h i j";
  docs[1].abstract = docs[0].abstract + " " + docs[0].abstract;
  const auto stats = AbstractWordStats(docs);
  EXPECT_DOUBLE_EQ(stats.department_means.at("x"), 15.0);
  EXPECT_DOUBLE_EQ(stats.overall, 15.0);
}

TEST(WordStats, FuzzedRecount) {
  std::mt19937_64 rng(8);
  synthetic::Generator gen(8);
  std::vector<CorpusDocument> docs;
  std::map<std::string, std::vector<double>> counts;
  for (int i = 0; i < 60; ++i) {
    CorpusDocument d;
    d.department = "d" + std::to_string(rng() % 4);
    const std::size_t n = 1 + rng() % 50;
    for (std::size_t k = 0; k < n; ++k) d.abstract += (k ? (rng() % 2 ? "  " : "\n") : "") + gen.Word();
    counts[d.department].push_back(static_cast<double>(n));
    docs.push_back(d);
  }
  const auto stats = AbstractWordStats(docs);
  double overall = 0;
  for (const auto& [dept, v] : counts) {
    double mean = 0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    EXPECT_NEAR(stats.department_means.at(dept), mean, 1e-9);
    EXPECT_EQ(stats.department_counts.at(dept), v.size());
    overall += mean;
  }
  EXPECT_NEAR(stats.overall, overall / static_cast<double>(counts.size()), 1e-9);
}

TEST(Split, PublishedCounts) {
  const SplitSpec spec;
  EXPECT_EQ(SplitSizes(101, spec), (SplitCounts{71, 15, 15}));
  EXPECT_EQ(SplitSizes(66, spec), (SplitCounts{46, 10, 10}));
  EXPECT_EQ(SplitSizes(20, spec), (SplitCounts{14, 3, 3}));
  EXPECT_EQ(SplitSizes(44, spec), (SplitCounts{30, 7, 7}));
  EXPECT_EQ(SplitSizes(3, spec), (SplitCounts{1, 1, 1}));
  try {
    SplitSizes(2, spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooFewDocuments);
  }
}

TEST(Split, SpecValidation) {
  SplitSpec bad;
  bad.train = 0.8;
  EXPECT_THROW(bad.Validate(), Error);
  SplitSpec zero;
  zero.train = 0.85;
  zero.val = 0.0;
  EXPECT_THROW(zero.Validate(), Error);
}

TEST(SplitMix64, ReferenceSequence) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.Next(), 0xE220A8397B1DCDAFull);
  EXPECT_EQ(rng.Next(), 0x6E789E6AA1B965F4ull);
  EXPECT_EQ(rng.Next(), 0x06C45D188009454Full);
}

TEST(Split, PartitionAndDeterminism) {
  synthetic::CorpusOptions opt;
  opt.docs_per_department = 11;
  opt.body_words = 40;
  opt.conclusion_words = 10;
  opt.abstract_words = 10;
  const auto docs = synthetic::MakeCorpus(opt);
  const SplitSpec spec;
  const auto a = SplitCorpus(docs, spec);
  ASSERT_EQ(a.size(), synthetic::kDepartments.size());
  for (const auto& s : a) {
    std::set<std::string> all;
    std::size_t total = 0;
    for (Stage stage : kStages) {
      total += s.ids(stage).size();
      all.insert(s.ids(stage).begin(), s.ids(stage).end());
    }
    EXPECT_EQ(total, 11u);
    EXPECT_EQ(all.size(), 11u);
    EXPECT_EQ(s.train.size(), 7u);
    EXPECT_EQ(s.val.size(), 2u);
    EXPECT_EQ(s.test.size(), 2u);
  }
  TempDir d1, d2;
  WriteSplitCsvs(docs, a, d1.path());
  WriteSplitCsvs(docs, SplitCorpus(docs, spec), d2.path());
  const auto files = ListFilesRecursive(d1.path());
  ASSERT_EQ(files.size(), 3 * synthetic::kDepartments.size());
  for (const auto& f : files) {
    EXPECT_EQ(ReadFile(f), ReadFile(d2.path() / std::filesystem::relative(f, d1.path())));
  }
  const auto rows = csv::Parse(ReadFile(d1 / "sociology_train.csv"));
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"doc_id", "department", "body", "abstract"}));
  EXPECT_EQ(rows[1][1], "sociology");
  SplitSpec other = spec;
  other.seed = spec.seed + 1;
  bool differs = false;
  const auto b = SplitCorpus(docs, other);
  for (std::size_t i = 0; i < a.size(); ++i) differs |= a[i].test != b[i].test;
  EXPECT_TRUE(differs);
}

}  // namespace
}  // namespace ats
