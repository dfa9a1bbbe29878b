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

#ifndef ATS_EXPERIMENT_H_
#define ATS_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ats/corpus.h"
#include "ats/evaluator.h"
#include "ats/segmenter.h"

namespace ats {

enum class SegmenterTrainingSet { kTrainSplit, kAllDocuments };

struct ExperimentConfig {
  std::filesystem::path corpus_dir;
  std::filesystem::path output_root;
  std::filesystem::path stopword_dir;
  std::optional<std::filesystem::path> charmap;     // default table if unset
  std::optional<std::filesystem::path> suffixes;    // default inventory if unset
  std::optional<std::filesystem::path> segmenter_model;  // trained if unset
  bool include_conclusions = true;
  // Runs both conditions and writes the comparison table.
  bool compare = false;
  std::int64_t word_limit = 182;
  SplitSpec split;
  SegmenterTrainingSet segmenter_training = SegmenterTrainingSet::kTrainSplit;
  PunktParams punkt;
  bool strict_departments = false;
  std::size_t workers = 0;  // 0: hardware concurrency

  // Throws Error(kMalformedConfig).
  void Validate() const;
};

// Reads the TOML config. Relative paths resolve against the config file's
// directory. ATS_SEED, when set, overrides split.seed.
ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path);
ExperimentConfig ParseExperimentConfig(std::string_view toml,
                                       const std::filesystem::path& base_dir);
void ApplySeedOverride(ExperimentConfig& cfg);

struct DocumentOutcome {
  std::string doc_id;
  std::string department;
  Stage stage = Stage::kTrain;
  bool ok = false;
  std::string error;
  std::vector<std::string> warnings;
  DocumentScores scores{};
  std::size_t body_words = 0;
  std::size_t sentences = 0;
  std::size_t final_words = 0;
};

struct ExperimentResult {
  std::string name;  // with_conclusion / without_conclusion
  std::filesystem::path tree;
  std::vector<DocumentOutcome> documents;  // corpus order
  RougeReport report;
  WordStats body_stats;
  std::size_t missing_conclusions = 0;
  std::size_t errors = 0;  // failed documents plus corpus load issues
  std::string manifest_sha256;
};

// One experimental condition over an already loaded corpus; writes the whole
// artifact tree under `tree`.
ExperimentResult RunCondition(const ExperimentConfig& cfg, const LoadedCorpus& corpus,
                              bool include_conclusions, const std::filesystem::path& tree);

struct ExperimentRun {
  std::vector<ExperimentResult> conditions;
  std::size_t errors = 0;
  std::string manifest_sha256;  // of <output_root>/manifest.json
};

// Loads the corpus and runs the configured condition(s) into
// <output_root>/{with_conclusion,without_conclusion}/, plus comparison.csv
// and comparison.md when comparing, and a top-level manifest.json.
ExperimentRun RunExperiment(const ExperimentConfig& cfg);

// Feature / Experiment 1 / Experiment 2 / Remarks rows.
std::vector<std::vector<std::string>> ComparisonRows(const ExperimentConfig& cfg,
                                                     const ExperimentResult& with,
                                                     const ExperimentResult& without);
std::string RenderComparisonMarkdown(const std::vector<std::vector<std::string>>& rows);

}  // namespace ats

#endif  // ATS_EXPERIMENT_H_
