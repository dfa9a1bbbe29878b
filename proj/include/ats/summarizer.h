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

#ifndef ATS_SUMMARIZER_H_
#define ATS_SUMMARIZER_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ats/preprocessor.h"
#include "ats/scorer.h"

namespace ats {

// Average abstract length of the reference corpus, rounded up.
inline constexpr std::int64_t kDefaultWordLimit = 182;

enum class SummaryKind { kFull, kFinal };

struct SummarySentence {
  std::size_t sentence_index = 0;
  std::string text;  // original surface text on one line
  std::size_t word_count = 0;

  bool operator==(const SummarySentence&) const = default;
};

struct Summary {
  std::string doc_id;
  SummaryKind kind = SummaryKind::kFull;
  std::vector<SummarySentence> selected;  // document order
  std::size_t total_words = 0;
  std::size_t total_sentences = 0;
  std::optional<std::int64_t> word_limit;
  // Set when the only selected sentence exceeds the limit on its own.
  bool override_applied = false;
};

// Whitespace-delimited words, punctuation attached.
std::size_t WordCount(std::string_view text);
// Collapses every whitespace run (line breaks included) to one space.
std::string SingleLine(std::string_view text);

// All retained sentences.
Summary ExtractFullSummary(const ProcessedDocument& doc, const ScoredDocument& scored);

// Greedy over ranks: a sentence is taken only if the running total stays
// within `word_limit`; oversize sentences are skipped. If nothing fits, the
// rank-1 sentence is taken alone and `override_applied` set.
// Throws Error(kInvalidLimit) when word_limit < 1.
Summary ExtractFinalSummary(const ProcessedDocument& doc, const ScoredDocument& scored,
                            std::int64_t word_limit = kDefaultWordLimit);

// Same selection over bare inputs: sentence texts in document order and the
// ranked sentence indices.
Summary ExtractFinalSummary(std::string doc_id,
                            const std::vector<std::string>& sentence_texts,
                            const std::vector<std::size_t>& ranked,
                            std::int64_t word_limit = kDefaultWordLimit);

// One sentence per line.
std::string RenderSummaryText(const Summary& summary);
// Joined with single spaces, for evaluation.
std::string SummaryProse(const Summary& summary);

struct SummaryState {
  std::string doc_id;
  SummaryKind kind = SummaryKind::kFull;
  std::optional<std::int64_t> word_limit;
  bool override_applied = false;
  std::vector<std::pair<std::size_t, std::size_t>> sentences;  // index, words
  std::size_t total_words = 0;
  std::size_t total_sentences = 0;

  bool operator==(const SummaryState&) const = default;
};

SummaryState StateOf(const Summary& summary);
std::string RenderSummaryState(const Summary& summary);
// Throws Error(kMalformedState).
SummaryState ParseSummaryState(std::string_view text);
void WriteSummaryState(const Summary& summary, const std::filesystem::path& path);

}  // namespace ats

#endif  // ATS_SUMMARIZER_H_
