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

#ifndef ATS_PREPROCESSOR_H_
#define ATS_PREPROCESSOR_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ats/normalizer.h"
#include "ats/segmenter.h"

namespace ats {

enum class StopwordSource { kNone, kGeneral, kDomain };

std::string_view StopwordSourceName(StopwordSource source);

struct Token {
  std::string surface;
  std::string stem;
  std::size_t sentence_index = 0;
  bool is_stopword = false;
  StopwordSource stopword_source = StopwordSource::kNone;
  bool is_punctuation = false;
};

// Whitespace split; leading and trailing punctuation marks become standalone
// tokens (one per mark). Word-internal marks and ZWNJ stay inside tokens.
std::vector<std::string> Tokenize(std::string_view sentence);

bool IsPunctuationToken(std::string_view token);

// Light suffix stripper. Each step removes the longest inventory suffix that
// leaves at least `min_stem_letters` letters (ZWNJ not counted); at most
// `max_strips` steps. Punctuation tokens are returned unchanged.
class Stemmer {
 public:
  explicit Stemmer(std::vector<std::string> suffixes, int max_strips = 2,
                   std::size_t min_stem_letters = 2);

  // Plural, indefinite, izafe and clitic suffixes of Sorani.
  static Stemmer Default();
  // One suffix per line, '#' comments.
  static Stemmer Load(const std::filesystem::path& path);

  std::string Stem(std::string_view surface) const;

  const std::vector<std::string>& suffixes() const { return suffixes_; }

 private:
  std::vector<std::string> suffixes_;  // longest first
  int max_strips_;
  std::size_t min_stem_letters_;
};

struct StopwordList {
  std::set<std::string> general;
  std::map<std::string, std::set<std::string>> domain;
};

// Reads `general.json` and every other `*.json` file of `dir`, each shaped
// {"department": "<id>", "stopwords": [...]}. Entries are normalized and
// stemmed so that membership is exact string equality on token stems.
// Throws Error(kMalformedStopwords) or Error(kIoFailure).
StopwordList LoadStopwords(const std::filesystem::path& dir,
                           const NormalizationConfig& cfg,
                           const Stemmer& stemmer);

struct RemovedStopword {
  std::string surface;
  StopwordSource source = StopwordSource::kNone;

  bool operator==(const RemovedStopword&) const = default;
};

struct StopwordResult {
  std::vector<Token> kept;
  std::vector<Token> removed;
  std::vector<RemovedStopword> log;
  // All tokens in input order with stopword flags set.
  std::vector<Token> flagged;
  bool department_known = true;
};

// A token is removed iff its stem is in the general list or the department's
// list. When the department is unknown the domain tier is skipped, or
// Error(kUnknownDepartment) is thrown if `strict`.
StopwordResult RemoveStopwords(std::vector<Token> tokens,
                               const StopwordList& lists,
                               std::string_view department, bool strict = false);

struct ProcessedSentence {
  SentenceSpan span;
  // Every token of the sentence in surface order; stopwords are flagged.
  std::vector<Token> tokens;
};

struct ProcessedDocument {
  std::string doc_id;
  std::string department;
  std::vector<ProcessedSentence> sentences;
  std::vector<RemovedStopword> removed_stopwords;
  struct Counts {
    std::size_t tokens = 0;
    std::size_t removed = 0;
  } counts;
  std::vector<std::string> warnings;
};

struct PreprocessOptions {
  bool strict_departments = false;
};

// Segments `normalized_text`, then tokenizes, stems and removes stopwords.
ProcessedDocument PreprocessDocument(std::string doc_id, std::string department,
                                     std::string_view normalized_text,
                                     const SegmenterModel& model,
                                     const StopwordList& stopwords,
                                     const Stemmer& stemmer,
                                     const PreprocessOptions& options = {});

// Artifact renderers. Word stems are written as "_stem_"; punctuation bare.
std::string RenderSentenceStems(const ProcessedSentence& sentence);
std::string RenderProcessedText(const ProcessedDocument& doc);
std::string RenderProcessedXml(const ProcessedDocument& doc);
std::string RenderDebug(const ProcessedDocument& doc);
std::string RenderTokens(const ProcessedDocument& doc);

// Writes Processed_<id>.txt, Processed_<id>.xml, Debug_<id>.txt and
// Processed_<id>_tokens.txt under `process_dir`.
void WritePreprocessArtifacts(const ProcessedDocument& doc,
                              const std::filesystem::path& process_dir);

}  // namespace ats

#endif  // ATS_PREPROCESSOR_H_
