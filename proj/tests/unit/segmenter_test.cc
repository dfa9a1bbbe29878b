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

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "ats/error.h"
#include "ats/file_util.h"
#include "ats/normalizer.h"
#include "ats/segmenter.h"
#include "ats/utf8.h"
#include "gtest/gtest.h"
#include "synthetic.h"
#include "temp_dir.h"

namespace ats {
namespace {

std::string Repeat(const std::string& s, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) out += s + " ";
  return out;
}

std::vector<std::string> Texts(const std::vector<SentenceSpan>& spans) {
  std::vector<std::string> out;
  for (const auto& s : spans) out.push_back(s.text);
  return out;
}

void ExpectPartition(const std::string& text, const std::vector<SentenceSpan>& spans) {
  std::size_t byte = 0;
  std::size_t cp = 0;
  for (const auto& s : spans) {
    ASSERT_LE(byte, s.byte_start);
    ASSERT_LT(s.start, s.end);
    const std::string gap = text.substr(byte, s.byte_start - byte);
    ASSERT_TRUE(utf8::Trim(gap).empty()) << "gap '" << gap << "'";
    cp += utf8::Length(gap);
    ASSERT_EQ(s.start, cp);
    ASSERT_EQ(text.substr(s.byte_start, s.byte_end - s.byte_start), s.text);
    cp += utf8::Length(s.text);
    ASSERT_EQ(s.end, cp);
    byte = s.byte_end;
  }
  EXPECT_TRUE(utf8::Trim(text.substr(byte)).empty());
  EXPECT_LE(cp, utf8::Length(text));
}

TEST(Segmenter, LearnsAbbreviationByLikelihood) {
  const SegmenterModel model = TrainSegmenter({Repeat("He saw Dr. Smith. Dr. Smith left.", 100)});
  ASSERT_TRUE(model.abbreviations.count("dr"));
  // 700 tokens, 400 of them period-final; "dr." occurs 200 times, never bare.
  const double p1 = 400.0 / 700.0;
  const double ll = -2.0 * (200 * std::log(p1) - 200 * std::log(0.99));
  EXPECT_NEAR(punkt::DunningLogLikelihood(200, 400, 200, 700), ll, 1e-9);
  const double score = ll * std::exp(-2.0);
  EXPECT_NEAR(score, 29.75, 0.01);
  EXPECT_GT(score, model.params.abbrev_threshold);
  EXPECT_EQ(model.type_counts.at("dr"), 200);
}

TEST(Segmenter, NoAbbreviationsWithoutRecurringTypes) {
  EXPECT_TRUE(TrainSegmenter({"One. Two. Three."}).abbreviations.empty());
}

TEST(Segmenter, EmptyCorpusThrows) {
  try {
    TrainSegmenter({"", "   \n"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyCorpus);
  }
  EXPECT_THROW(TrainSegmenter({}), Error);
}

TEST(Segmenter, TrainingIsDeterministic) {
  const std::vector<std::string> corpus = {Repeat("He saw Dr. Smith. Dr. Smith left.", 20),
                                           "One. Two. Three."};
  EXPECT_EQ(SerializeModel(TrainSegmenter(corpus)), SerializeModel(TrainSegmenter(corpus)));
}

TEST(Segmenter, UnambiguousTerminals) {
  const SegmenterModel empty;
  EXPECT_EQ(Texts(Segment(empty, "چۆنی؟ باشم.")), (std::vector<std::string>{"چۆنی؟", "باشم."}));
  EXPECT_EQ(Segment(empty, "no terminal punctuation at all").size(), 1u);
  EXPECT_TRUE(Segment(empty, "  \n ").empty());
  EXPECT_EQ(Segment(empty, "a، b، c.").size(), 1u);
}

TEST(Segmenter, AbbreviationSuppressesBoundary) {
  SegmenterModel model;
  model.abbreviations = {"dr"};
  model.type_counts = {{"dr", 1}};
  EXPECT_EQ(Texts(Segment(model, "He saw Dr. Smith. He left.")),
            (std::vector<std::string>{"He saw Dr. Smith.", "He left."}));
  EXPECT_EQ(Segment(SegmenterModel{}, "He saw Dr. Smith. He left.").size(), 3u);
}

TEST(Segmenter, SentenceStarterOverridesAbbreviation) {
  SegmenterModel model;
  model.abbreviations = {"etc"};
  model.sentence_starters = {"the"};
  model.type_counts = {{"etc", 1}, {"the", 1}};
  EXPECT_EQ(Segment(model, "Apples, pears etc. The end.").size(), 2u);
  EXPECT_EQ(Segment(model, "Apples, pears etc. and more.").size(), 1u);
}

TEST(Segmenter, CollocationSuppressesBoundary) {
  SegmenterModel model;
  model.collocations = {{"##number##", "ساڵ"}};
  model.type_counts = {{"##number##", 1}, {"ساڵ", 1}};
  EXPECT_EQ(Segment(model, "لە 12. ساڵ دا. باشە.").size(), 2u);
}

TEST(Segmenter, SpansPartitionText) {
  std::mt19937_64 rng(9);
  const std::vector<std::string> pieces = {"ab", "Dr.", "x.", "?", "؟", "«ش»", "  ", "\n",
                                           "12.", "ک.", "a!)", "e.g.", " . "};
  SegmenterModel model;
  model.abbreviations = {"dr", "ک"};
  model.type_counts = {{"dr", 1}, {"ک", 1}};
  for (int t = 0; t < 2000; ++t) {
    std::string text;
    const int n = static_cast<int>(rng() % 20);
    for (int i = 0; i < n; ++i) text += pieces[rng() % pieces.size()] + (rng() % 3 ? " " : "");
    ExpectPartition(text, Segment(model, text));
  }
}

TEST(Segmenter, AddingAbbreviationNeverAddsBoundaries) {
  synthetic::Generator gen(21);
  const std::vector<std::string> types = {"د", "ب", "ئەو", "لە", "##number##"};
  for (int t = 0; t < 300; ++t) {
    const std::string text = gen.Text(60);
    SegmenterModel base;
    for (std::size_t i = 0; i < types.size(); ++i) {
      if (gen.Uniform(2)) base.abbreviations.insert(types[i]);
    }
    SegmenterModel more = base;
    more.abbreviations.insert(types[gen.Uniform(types.size())]);
    ASSERT_LE(Segment(more, text).size(), Segment(base, text).size());
  }
}

TEST(Segmenter, RoundTripPreservesSegmentation) {
  synthetic::Generator gen(4);
  std::vector<std::string> corpus;
  for (int i = 0; i < 20; ++i) corpus.push_back(gen.Text(400));
  const SegmenterModel model = TrainSegmenter(corpus);
  ASSERT_TRUE(model.abbreviations.count(synthetic::kAbbreviation));
  testing::TempDir dir;
  SaveModel(model, dir / "m.segmodel.json");
  const SegmenterModel loaded = LoadModel(dir / "m.segmodel.json");
  EXPECT_EQ(loaded, model);
  std::string held_out;
  for (int i = 0; i < 50; ++i) held_out += gen.Sentence(12) + " ";
  const auto before = Segment(model, held_out);
  const auto after = Segment(loaded, held_out);
  EXPECT_EQ(Texts(before), Texts(after));
  for (const auto& s : before) {
    EXPECT_FALSE(s.text.ends_with(std::string(synthetic::kAbbreviation) + ".")) << s.text;
  }
}

TEST(Segmenter, MalformedModelFiles) {
  const SegmenterModel model = TrainSegmenter({Repeat("He saw Dr. Smith. Dr. Smith left.", 5)});
  const std::string text = SerializeModel(model);
  EXPECT_EQ(ParseModel(text), model);
  auto expect_malformed = [](std::string_view json) {
    try {
      ParseModel(json);
      ADD_FAILURE() << "accepted: " << json;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kMalformedModel);
    }
  };
  expect_malformed(text.substr(0, text.size() / 2));
  expect_malformed("{\"version\": 99}");
  expect_malformed("[]");
  testing::TempDir dir;
  WriteFile(dir / "t.json", text.substr(0, 10));
  EXPECT_THROW(LoadModel(dir / "t.json"), Error);
  try {
    LoadModel(dir / "missing.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIoFailure);
  }
}

TEST(Segmenter, AnalyzeToken) {
  const auto dr = punkt::AnalyzeToken("Dr.");
  EXPECT_EQ(dr.type, "dr");
  EXPECT_TRUE(dr.period_final);
  const auto num = punkt::AnalyzeToken("٢٠٢٣.");
  EXPECT_TRUE(num.is_number);
  EXPECT_EQ(num.type, "##number##");
  EXPECT_TRUE(punkt::AnalyzeToken("باشە؟").hard_final);
  EXPECT_TRUE(punkt::AnalyzeToken("ک.").is_initial);
}

}  // namespace
}  // namespace ats
