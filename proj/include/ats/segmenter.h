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

#ifndef ATS_SEGMENTER_H_
#define ATS_SEGMENTER_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ats {

struct PunktParams {
  double abbrev_threshold = 0.3;
  double colloc_threshold = 7.88;
  double starter_threshold = 30.0;
  // Pairs occurring at most this often are never collocations.
  std::int64_t min_colloc_freq = 1;
  // When false only number- or initial-final tokens start a collocation.
  bool include_all_collocations = false;

  bool operator==(const PunktParams&) const = default;
};

// Trained sentence-boundary statistics. Types are lower-cased (ASCII) word
// forms with their sentence-final period removed; numbers collapse to
// "##number##". Immutable once trained; safe to share across threads.
struct SegmenterModel {
  static constexpr int kVersion = 1;

  std::set<std::string> abbreviations;
  std::set<std::pair<std::string, std::string>> collocations;
  std::set<std::string> sentence_starters;
  std::map<std::string, std::int64_t> type_counts;
  PunktParams params;

  bool operator==(const SegmenterModel&) const = default;
};

// Offsets are in codepoints (start inclusive, end exclusive); the byte
// offsets are carried for slicing the source without re-decoding.
struct SentenceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string text;
  std::size_t byte_start = 0;
  std::size_t byte_end = 0;
};

// Throws Error(kEmptyCorpus) when the corpus has no tokens.
SegmenterModel TrainSegmenter(const std::vector<std::string>& corpus,
                              const PunktParams& params = {});

// Boundaries follow ".", "!", "?" or "؟" (optionally followed by closing
// quotes/brackets) at the end of a whitespace-delimited token. A "." is not a
// boundary when the token pair is a collocation, or when the token is an
// abbreviation and the next token is not a frequent sentence starter. Spans
// are trimmed of surrounding whitespace; text without terminals yields one
// span and whitespace-only text yields none.
std::vector<SentenceSpan> Segment(const SegmenterModel& model,
                                  std::string_view text);

std::string SerializeModel(const SegmenterModel& model);
// Throws Error(kMalformedModel).
SegmenterModel ParseModel(std::string_view json);
void SaveModel(const SegmenterModel& model, const std::filesystem::path& path);
SegmenterModel LoadModel(const std::filesystem::path& path);

namespace punkt {

// Log-likelihood statistics of the trainer, exposed for tests.
double DunningLogLikelihood(double count_a, double count_b, double count_ab,
                            double n);
double CollocationLogLikelihood(double count_a, double count_b,
                                double count_ab, double n);

struct TokenInfo {
  std::string type;
  bool period_final = false;  // ends with an ambiguous "."
  bool hard_final = false;    // ends with "!", "?" or "؟"
  bool has_word = false;      // not pure punctuation
  bool is_number = false;
  bool is_initial = false;    // a single letter
};

TokenInfo AnalyzeToken(std::string_view token);

}  // namespace punkt

}  // namespace ats

#endif  // ATS_SEGMENTER_H_
