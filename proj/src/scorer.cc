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

#include "ats/scorer.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <unordered_map>

#include "ats/error.h"
#include "ats/file_util.h"
#include "ats/kernels.h"

namespace ats {

std::vector<std::vector<std::string>> ContentStems(const ProcessedDocument& doc) {
  std::vector<std::vector<std::string>> out;
  out.reserve(doc.sentences.size());
  for (const auto& s : doc.sentences) {
    std::vector<std::string> stems;
    for (const Token& tok : s.tokens) {
      if (!tok.is_stopword && !tok.is_punctuation) stems.push_back(tok.stem);
    }
    out.push_back(std::move(stems));
  }
  return out;
}

std::vector<double> WeightsFromFrequencies(
    const std::vector<std::vector<std::int32_t>>& sentence_stem_ids,
    std::span<const std::int32_t> frequencies) {
  const std::int32_t max_freq =
      frequencies.empty() ? 0 : *std::max_element(frequencies.begin(), frequencies.end());
  std::vector<double> weights;
  weights.reserve(sentence_stem_ids.size());
  for (const auto& ids : sentence_stem_ids) {
    if (ids.empty() || max_freq <= 0) {
      weights.push_back(0.0);
      continue;
    }
    const std::int64_t sum = kernels::GatherSum(ids, frequencies);
    weights.push_back(static_cast<double>(sum) /
                      (static_cast<double>(max_freq) * static_cast<double>(ids.size())));
  }
  return weights;
}

std::vector<SentenceScore> SentenceWeights(
    const std::vector<std::vector<std::string>>& sentence_stems) {
  std::unordered_map<std::string, std::int32_t> ids;
  std::vector<std::int32_t> freq;
  std::vector<std::vector<std::int32_t>> sentence_ids;
  sentence_ids.reserve(sentence_stems.size());
  for (const auto& stems : sentence_stems) {
    std::vector<std::int32_t> row;
    row.reserve(stems.size());
    for (const std::string& stem : stems) {
      auto [it, inserted] = ids.emplace(stem, static_cast<std::int32_t>(freq.size()));
      if (inserted) freq.push_back(0);
      ++freq[it->second];
      row.push_back(it->second);
    }
    sentence_ids.push_back(std::move(row));
  }
  const std::vector<double> weights = WeightsFromFrequencies(sentence_ids, freq);
  std::vector<SentenceScore> scores(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    scores[i].sentence_index = i;
    scores[i].weight = weights[i];
  }
  return scores;
}

std::vector<SentenceScore> SentenceWeights(const ProcessedDocument& doc) {
  if (doc.sentences.empty()) {
    throw Error(ErrorCode::kEmptyDocument, "document '" + doc.doc_id + "' has no sentences");
  }
  return SentenceWeights(ContentStems(doc));
}

void PruneBottomHalf(std::vector<SentenceScore>& scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a].weight > scores[b].weight;
  });
  const std::size_t keep = (scores.size() + 1) / 2;
  for (std::size_t k = 0; k < order.size(); ++k) {
    SentenceScore& s = scores[order[k]];
    s.retained = k < keep;
    s.tfidf.reset();
    s.rank.reset();
  }
}

void TfidfScores(std::vector<SentenceScore>& scores,
                 const std::vector<std::vector<std::string>>& sentence_stems) {
  std::map<std::string, std::size_t> df;
  std::size_t retained = 0;
  for (const SentenceScore& s : scores) {
    if (!s.retained) continue;
    ++retained;
    std::vector<std::string> distinct = sentence_stems[s.sentence_index];
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (const std::string& w : distinct) ++df[w];
  }
  const auto r = static_cast<double>(retained);
  for (SentenceScore& s : scores) {
    if (!s.retained) {
      s.tfidf.reset();
      continue;
    }
    const auto& stems = sentence_stems[s.sentence_index];
    if (stems.empty()) {
      s.tfidf = 0.0;
      continue;
    }
    std::map<std::string, std::size_t> counts;
    for (const std::string& w : stems) ++counts[w];
    const auto len = static_cast<double>(stems.size());
    double sum = 0.0;
    for (const auto& [w, c] : counts) {
      const double idf = std::log(r / static_cast<double>(df[w]));
      sum += (static_cast<double>(c) / len) * idf;
    }
    s.tfidf = sum / len;
  }
}

std::vector<std::size_t> RankDescending(std::vector<SentenceScore>& scores) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i].retained) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a].tfidf.value_or(0.0) > scores[b].tfidf.value_or(0.0);
  });
  for (std::size_t k = 0; k < order.size(); ++k) scores[order[k]].rank = k + 1;
  return order;
}

ScoredDocument ScoreDocument(const ProcessedDocument& doc) {
  if (doc.sentences.empty()) {
    throw Error(ErrorCode::kEmptyDocument, "document '" + doc.doc_id + "' has no sentences");
  }
  const auto stems = ContentStems(doc);
  ScoredDocument out;
  out.scores = SentenceWeights(stems);
  PruneBottomHalf(out.scores);
  TfidfScores(out.scores, stems);
  const std::vector<std::size_t> order = RankDescending(out.scores);
  for (std::size_t pos : order) out.ranked.push_back(out.scores[pos].sentence_index);
  return out;
}

std::string FormatScore(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", value);
  return buf;
}

namespace {

std::string Record(const ProcessedDocument& doc, std::size_t sentence,
                   std::string_view label, double value) {
  return "Sentence: " + RenderSentenceStems(doc.sentences[sentence]) + "\n" +
         std::string(label) + ": " + FormatScore(value) + "\n\n";
}

}  // namespace

std::string RenderSentenceWeights(const ProcessedDocument& doc,
                                  const ScoredDocument& scored) {
  std::string out;
  for (const SentenceScore& s : scored.scores) {
    out += Record(doc, s.sentence_index, "Weight", s.weight);
  }
  return out;
}

std::string RenderTfidf(const ProcessedDocument& doc, const ScoredDocument& scored) {
  std::string out;
  for (const SentenceScore& s : scored.scores) {
    if (s.retained) out += Record(doc, s.sentence_index, "TF-IDF Weight", *s.tfidf);
  }
  return out;
}

std::string RenderSortedTfidf(const ProcessedDocument& doc,
                              const ScoredDocument& scored) {
  std::string out;
  for (std::size_t idx : scored.ranked) {
    out += Record(doc, idx, "TF-IDF Weight", *scored.scores[idx].tfidf);
  }
  return out;
}

void WriteScoreArtifacts(const ProcessedDocument& doc, const ScoredDocument& scored,
                         const std::filesystem::path& process_dir) {
  const std::string& id = doc.doc_id;
  WriteFile(process_dir / ("Processed_Sentence_Weight_" + id + ".txt"),
            RenderSentenceWeights(doc, scored));
  WriteFile(process_dir / ("Processed_TF-IDF_" + id + ".txt"), RenderTfidf(doc, scored));
  WriteFile(process_dir / ("Sorted_TF-IDF_" + id + ".txt"),
            RenderSortedTfidf(doc, scored));
}

}  // namespace ats
