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

#ifndef ATS_SCORER_H_
#define ATS_SCORER_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ats/preprocessor.h"

namespace ats {

struct SentenceScore {
  std::size_t sentence_index = 0;
  double weight = 0.0;                // in [0, 1]
  std::optional<double> tfidf;        // set iff retained
  std::optional<std::size_t> rank;    // 1-based, set iff retained
  bool retained = false;
};

// Non-stopword, non-punctuation stems of every sentence, in surface order.
// These are the tokens all scores are computed over.
std::vector<std::vector<std::string>> ContentStems(const ProcessedDocument& doc);

// weight(s) = (sum of document frequencies of the stems of s / max frequency)
// / |s|; sentences without content stems weigh 0.
// `sentence_stem_ids` index into `frequencies`.
std::vector<double> WeightsFromFrequencies(
    const std::vector<std::vector<std::int32_t>>& sentence_stem_ids,
    std::span<const std::int32_t> frequencies);

std::vector<SentenceScore> SentenceWeights(
    const std::vector<std::vector<std::string>>& sentence_stems);
// Throws Error(kEmptyDocument) when `doc` has no sentences.
std::vector<SentenceScore> SentenceWeights(const ProcessedDocument& doc);

// Retains the ceil(n/2) highest weights; ties go to the earlier sentence.
void PruneBottomHalf(std::vector<SentenceScore>& scores);

// TF-IDF with the retained sentences as the document universe:
// score(s) = sum over distinct stems w of s of tf(w,s) * ln(R / df(w)), / |s|.
void TfidfScores(std::vector<SentenceScore>& scores,
                 const std::vector<std::vector<std::string>>& sentence_stems);

// Orders retained sentences by descending TF-IDF (ties: document order),
// assigns ranks 1..R, and returns positions into `scores` in rank order.
std::vector<std::size_t> RankDescending(std::vector<SentenceScore>& scores);

struct ScoredDocument {
  std::vector<SentenceScore> scores;   // one per sentence, document order
  std::vector<std::size_t> ranked;     // sentence indices, rank order
};

ScoredDocument ScoreDocument(const ProcessedDocument& doc);

std::string FormatScore(double value);  // fixed, 3 decimals
std::string RenderSentenceWeights(const ProcessedDocument& doc,
                                  const ScoredDocument& scored);
std::string RenderTfidf(const ProcessedDocument& doc, const ScoredDocument& scored);
std::string RenderSortedTfidf(const ProcessedDocument& doc,
                              const ScoredDocument& scored);

// Processed_Sentence_Weight_<id>.txt, Processed_TF-IDF_<id>.txt,
// Sorted_TF-IDF_<id>.txt.
void WriteScoreArtifacts(const ProcessedDocument& doc, const ScoredDocument& scored,
                         const std::filesystem::path& process_dir);

}  // namespace ats

#endif  // ATS_SCORER_H_
