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

#ifndef ATS_CORPUS_H_
#define ATS_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ats/error.h"

namespace ats {

// Codepoint offsets into the raw body, end exclusive.
struct ConclusionSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const ConclusionSpan&) const = default;
};

struct CorpusDocument {
  std::string doc_id;
  std::string department;
  std::string body;      // cleaned body text
  std::string abstract;  // reference summary
  std::optional<ConclusionSpan> conclusion;
};

struct LoadIssue {
  std::string department;
  std::string doc_id;
  ErrorCode code;
  std::string message;
};

struct LoadedCorpus {
  std::vector<CorpusDocument> documents;  // sorted by (department, doc_id)
  std::vector<LoadIssue> issues;          // documents skipped
};

// Layout: <root>/<department>/<doc_id>/{body.txt, abstract.txt,
// [conclusion.meta]}. The sidecar holds one line "conclusion <start> <end>".
// Per-document problems are collected in `issues`; the document is skipped.
LoadedCorpus LoadCorpus(const std::filesystem::path& root);

// Throws Error(kMalformedMeta).
ConclusionSpan ParseConclusionMeta(std::string_view text);
std::string RenderConclusionMeta(const ConclusionSpan& span);

struct WordStats {
  std::map<std::string, double> department_means;
  std::map<std::string, std::size_t> department_counts;
  double overall = 0.0;  // mean of department means
};

double MeanOfMeans(const std::map<std::string, double>& means);
// Mean whitespace word count of each document's abstract.
WordStats AbstractWordStats(const std::vector<CorpusDocument>& docs);
// Same over bodies.
WordStats BodyWordStats(const std::vector<CorpusDocument>& docs);

// Excises the conclusion span from the body. Documents without a span pass
// through unchanged and increment `*missing` when given.
CorpusDocument StripConclusion(const CorpusDocument& doc, std::size_t* missing = nullptr);

struct SplitSpec {
  double train = 0.70;
  double val = 0.15;
  double test = 0.15;
  std::uint64_t seed = 20240101;

  // Throws Error(kMalformedConfig).
  void Validate() const;
};

struct SplitCounts {
  std::size_t train = 0;
  std::size_t val = 0;
  std::size_t test = 0;

  bool operator==(const SplitCounts&) const = default;
};

// test = round_half_up(test * n), val = round_half_up(val * n), train takes
// the rest; each stage keeps at least one document.
// Throws Error(kTooFewDocuments) when n < 3.
SplitCounts SplitSizes(std::size_t n, const SplitSpec& spec);

// SplitMix64 (Steele, Lea & Flood).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t Next();

 private:
  std::uint64_t state_;
};

// Sorts ids bytewise, then Fisher-Yates from the back with j = Next() % (i+1).
std::vector<std::string> SeededShuffle(std::vector<std::string> ids, std::uint64_t seed);

enum class Stage { kTrain, kVal, kTest };
inline constexpr Stage kStages[] = {Stage::kTrain, Stage::kVal, Stage::kTest};
std::string_view StageName(Stage stage);  // train, val, test
// Folder names for summaries and evaluation output.
std::string_view StageFolder(Stage stage);  // training, validation, testing

struct DepartmentSplit {
  std::string department;
  std::vector<std::string> train;
  std::vector<std::string> val;
  std::vector<std::string> test;

  const std::vector<std::string>& ids(Stage stage) const;
};

// Shuffles every department's ids independently from `spec.seed`; the first
// `test` shuffled ids form the test set, the next `val` the validation set.
std::vector<DepartmentSplit> SplitCorpus(const std::vector<CorpusDocument>& docs,
                                         const SplitSpec& spec);

// doc_id,department,body,abstract with a header row.
std::string RenderSplitCsv(const std::vector<const CorpusDocument*>& rows);
// splits/<department>_{train,val,test}.csv under `dir`.
void WriteSplitCsvs(const std::vector<CorpusDocument>& docs,
                    const std::vector<DepartmentSplit>& splits,
                    const std::filesystem::path& dir);

}  // namespace ats

#endif  // ATS_CORPUS_H_
