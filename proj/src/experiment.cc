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

#include "ats/experiment.h"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

#include "ats/config.h"
#include "ats/csv.h"
#include "ats/file_util.h"
#include "ats/normalizer.h"
#include "ats/preprocessor.h"
#include "ats/scorer.h"
#include "ats/summarizer.h"
#include "json.hpp"

namespace ats {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::set<std::string>& KnownKeys() {
  static const std::set<std::string> keys = {
      "corpus.dir",           "corpus.stopwords",
      "corpus.charmap",       "corpus.suffixes",
      "output.root",          "experiment.include_conclusions",
      "experiment.compare",   "experiment.word_limit",
      "experiment.workers",   "experiment.strict_departments",
      "split.train",          "split.val",
      "split.test",           "split.seed",
      "segmenter.model",      "segmenter.train_on",
      "segmenter.abbrev_threshold", "segmenter.colloc_threshold",
      "segmenter.starter_threshold", "segmenter.min_colloc_freq",
      "segmenter.include_all_collocations",
  };
  return keys;
}

fs::path Resolve(const fs::path& base, const std::string& p) {
  const fs::path path(p);
  return path.is_absolute() ? path : base / path;
}

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string MetricLabel(RougeMetric m) {
  return m == RougeMetric::kRouge1 ? "ROUGE-1" : m == RougeMetric::kRouge2 ? "ROUGE-2" : "ROUGE-L";
}

std::string Percent(double ratio) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g%%", ratio * 100.0);
  return buf;
}

json ConfigJson(const ExperimentConfig& cfg, bool include_conclusions) {
  return {
      {"include_conclusions", include_conclusions},
      {"word_limit", cfg.word_limit},
      {"split", {{"train", cfg.split.train}, {"val", cfg.split.val},
                 {"test", cfg.split.test}, {"seed", cfg.split.seed}}},
      {"segmenter",
       {{"pretrained", cfg.segmenter_model.has_value()},
        {"train_on", cfg.segmenter_training == SegmenterTrainingSet::kTrainSplit ? "train" : "all"},
        {"abbrev_threshold", cfg.punkt.abbrev_threshold},
        {"colloc_threshold", cfg.punkt.colloc_threshold},
        {"starter_threshold", cfg.punkt.starter_threshold},
        {"min_colloc_freq", cfg.punkt.min_colloc_freq},
        {"include_all_collocations", cfg.punkt.include_all_collocations}}},
      {"strict_departments", cfg.strict_departments},
      {"custom_charmap", cfg.charmap.has_value()},
      {"custom_suffixes", cfg.suffixes.has_value()},
  };
}

std::string CorpusDigest(const LoadedCorpus& corpus) {
  std::string acc;
  for (const auto& d : corpus.documents) {
    acc += d.department + "/" + d.doc_id + ":" + Sha256Hex(d.body) + ":" + Sha256Hex(d.abstract);
    if (d.conclusion) {
      acc += ":" + std::to_string(d.conclusion->start) + "-" + std::to_string(d.conclusion->end);
    }
    acc += "\n";
  }
  return Sha256Hex(acc);
}

json OutputHashes(const fs::path& tree, const fs::path& skip) {
  json out = json::object();
  for (const fs::path& file : ListFilesRecursive(tree)) {
    if (file == skip) continue;
    out[fs::relative(file, tree).generic_string()] = Sha256Hex(ReadFile(file));
  }
  return out;
}

template <typename Fn>
void ParallelFor(std::size_t n, std::size_t workers, Fn&& fn) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(n, 1));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) fn(i);
  };
  if (workers <= 1) {
    work();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
}

struct Resources {
  NormalizationConfig norm;
  Stemmer stemmer = Stemmer::Default();
  StopwordList stopwords;
};

Resources LoadResources(const ExperimentConfig& cfg) {
  Resources r;
  r.norm = cfg.charmap ? LoadNormalizationConfig(*cfg.charmap) : NormalizationConfig::Default();
  if (cfg.suffixes) r.stemmer = Stemmer::Load(*cfg.suffixes);
  r.stopwords = LoadStopwords(cfg.stopword_dir, r.norm, r.stemmer);
  return r;
}

}  // namespace

void ExperimentConfig::Validate() const {
  if (word_limit < 1) {
    throw Error(ErrorCode::kMalformedConfig, "experiment.word_limit must be >= 1");
  }
  if (corpus_dir.empty()) throw Error(ErrorCode::kMalformedConfig, "corpus.dir is required");
  if (output_root.empty()) throw Error(ErrorCode::kMalformedConfig, "output.root is required");
  if (stopword_dir.empty()) {
    throw Error(ErrorCode::kMalformedConfig, "corpus.stopwords is required");
  }
  split.Validate();
}

ExperimentConfig ParseExperimentConfig(std::string_view toml, const fs::path& base_dir) {
  const ConfigFile file = ConfigFile::Parse(toml);
  for (const auto& [key, value] : file.values()) {
    if (!KnownKeys().count(key)) {
      throw Error(ErrorCode::kMalformedConfig, "unknown key '" + key + "'");
    }
  }
  ExperimentConfig cfg;
  if (auto v = file.GetString("corpus.dir")) cfg.corpus_dir = Resolve(base_dir, *v);
  if (auto v = file.GetString("corpus.stopwords")) cfg.stopword_dir = Resolve(base_dir, *v);
  if (auto v = file.GetString("corpus.charmap")) cfg.charmap = Resolve(base_dir, *v);
  if (auto v = file.GetString("corpus.suffixes")) cfg.suffixes = Resolve(base_dir, *v);
  if (auto v = file.GetString("output.root")) cfg.output_root = Resolve(base_dir, *v);
  if (auto v = file.GetBool("experiment.include_conclusions")) cfg.include_conclusions = *v;
  if (auto v = file.GetBool("experiment.compare")) cfg.compare = *v;
  if (auto v = file.GetInt("experiment.word_limit")) cfg.word_limit = *v;
  if (auto v = file.GetInt("experiment.workers")) {
    if (*v < 0) throw Error(ErrorCode::kMalformedConfig, "experiment.workers must be >= 0");
    cfg.workers = static_cast<std::size_t>(*v);
  }
  if (auto v = file.GetBool("experiment.strict_departments")) cfg.strict_departments = *v;
  if (auto v = file.GetDouble("split.train")) cfg.split.train = *v;
  if (auto v = file.GetDouble("split.val")) cfg.split.val = *v;
  if (auto v = file.GetDouble("split.test")) cfg.split.test = *v;
  if (auto v = file.GetInt("split.seed")) cfg.split.seed = static_cast<std::uint64_t>(*v);
  if (auto v = file.GetString("segmenter.model")) cfg.segmenter_model = Resolve(base_dir, *v);
  if (auto v = file.GetString("segmenter.train_on")) {
    if (*v == "train") {
      cfg.segmenter_training = SegmenterTrainingSet::kTrainSplit;
    } else if (*v == "all") {
      cfg.segmenter_training = SegmenterTrainingSet::kAllDocuments;
    } else {
      throw Error(ErrorCode::kMalformedConfig, "segmenter.train_on must be 'train' or 'all'");
    }
  }
  if (auto v = file.GetDouble("segmenter.abbrev_threshold")) cfg.punkt.abbrev_threshold = *v;
  if (auto v = file.GetDouble("segmenter.colloc_threshold")) cfg.punkt.colloc_threshold = *v;
  if (auto v = file.GetDouble("segmenter.starter_threshold")) cfg.punkt.starter_threshold = *v;
  if (auto v = file.GetInt("segmenter.min_colloc_freq")) cfg.punkt.min_colloc_freq = *v;
  if (auto v = file.GetBool("segmenter.include_all_collocations")) {
    cfg.punkt.include_all_collocations = *v;
  }
  cfg.Validate();
  return cfg;
}

void ApplySeedOverride(ExperimentConfig& cfg) {
  const char* env = std::getenv("ATS_SEED");
  if (env == nullptr || *env == '\0') return;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') {
    throw Error(ErrorCode::kMalformedConfig, "ATS_SEED must be a non-negative integer");
  }
  cfg.split.seed = v;
}

ExperimentConfig LoadExperimentConfig(const fs::path& path) {
  ExperimentConfig cfg = ParseExperimentConfig(ReadFile(path), path.parent_path());
  ApplySeedOverride(cfg);
  return cfg;
}

ExperimentResult RunCondition(const ExperimentConfig& cfg, const LoadedCorpus& corpus,
                              bool include_conclusions, const fs::path& tree) {
  ExperimentResult result;
  result.name = include_conclusions ? "with_conclusion" : "without_conclusion";
  result.tree = tree;
  std::error_code ec;
  fs::remove_all(tree, ec);
  fs::create_directories(tree);

  const Resources res = LoadResources(cfg);

  // Condition inputs, normalized once.
  std::vector<CorpusDocument> docs;
  docs.reserve(corpus.documents.size());
  for (const CorpusDocument& d : corpus.documents) {
    CorpusDocument doc = include_conclusions
                             ? d
                             : StripConclusion(d, &result.missing_conclusions);
    doc.body = Normalize(doc.body, res.norm);
    doc.abstract = Normalize(doc.abstract, res.norm);
    docs.push_back(std::move(doc));
  }
  result.body_stats = BodyWordStats(docs);

  const std::vector<DepartmentSplit> splits = SplitCorpus(docs, cfg.split);
  WriteSplitCsvs(docs, splits, tree / "splits");
  std::map<std::string, Stage> stage_of;
  for (const auto& s : splits) {
    for (Stage stage : kStages) {
      for (const std::string& id : s.ids(stage)) stage_of[id] = stage;
    }
  }

  SegmenterModel model;
  if (cfg.segmenter_model) {
    model = LoadModel(*cfg.segmenter_model);
  } else {
    std::vector<std::string> training;
    for (const auto& d : docs) {
      if (cfg.segmenter_training == SegmenterTrainingSet::kAllDocuments ||
          stage_of[d.doc_id] == Stage::kTrain) {
        training.push_back(d.body);
      }
    }
    model = TrainSegmenter(training, cfg.punkt);
  }
  SaveModel(model, tree / "segmenters" / "segmenter.segmodel.json");

  PreprocessOptions options;
  options.strict_departments = cfg.strict_departments;
  result.documents.resize(docs.size());
  ParallelFor(docs.size(), cfg.workers, [&](std::size_t i) {
    const CorpusDocument& d = docs[i];
    DocumentOutcome& out = result.documents[i];
    out.doc_id = d.doc_id;
    out.department = d.department;
    out.stage = stage_of.at(d.doc_id);
    const fs::path folder(std::string(StageFolder(out.stage)));
    try {
      const ProcessedDocument doc = PreprocessDocument(
          d.doc_id, d.department, d.body, model, res.stopwords, res.stemmer, options);
      out.warnings = doc.warnings;
      WritePreprocessArtifacts(doc, tree / "process");
      const ScoredDocument scored = ScoreDocument(doc);
      WriteScoreArtifacts(doc, scored, tree / "process");
      const Summary full = ExtractFullSummary(doc, scored);
      const Summary final_summary = ExtractFinalSummary(doc, scored, cfg.word_limit);
      const fs::path sdir = tree / "summaries" / folder;
      WriteFile(sdir / (d.doc_id + ".full.txt"), RenderSummaryText(full));
      WriteFile(sdir / (d.doc_id + ".final.txt"), RenderSummaryText(final_summary));
      WriteSummaryState(final_summary, sdir / (d.doc_id + ".state.txt"));
      out.scores = EvaluateDocument(SummaryProse(final_summary), d.abstract);
      WriteFile(tree / "eval" / folder / (d.doc_id + ".rouge.csv"), RenderDocumentCsv(out.scores));
      out.body_words = WordCount(d.body);
      out.sentences = doc.sentences.size();
      out.final_words = final_summary.total_words;
      out.ok = true;
    } catch (const std::exception& e) {
      out.ok = false;
      out.error = e.what();
    }
  });

  std::vector<DocumentScores> all_scores;
  std::vector<std::string> all_depts;
  std::map<Stage, std::pair<std::vector<DocumentScores>, std::vector<std::string>>> by_stage;
  for (const auto& o : result.documents) {
    if (!o.ok) {
      ++result.errors;
      continue;
    }
    all_scores.push_back(o.scores);
    all_depts.push_back(o.department);
    by_stage[o.stage].first.push_back(o.scores);
    by_stage[o.stage].second.push_back(o.department);
  }
  result.errors += corpus.issues.size();
  result.report = Aggregate(all_scores, all_depts);
  WriteFile(tree / "eval" / "report.csv", RenderReportCsv(result.report));
  for (const auto& [stage, rows] : by_stage) {
    WriteFile(tree / "eval" / std::string(StageFolder(stage)) / "report.csv",
              RenderReportCsv(Aggregate(rows.first, rows.second)));
  }

  json manifest;
  manifest["version"] = 1;
  manifest["condition"] = result.name;
  manifest["config"] = ConfigJson(cfg, include_conclusions);
  manifest["corpus_sha256"] = CorpusDigest(corpus);
  json doc_list = json::array();
  for (const auto& o : result.documents) {
    json entry = {{"doc_id", o.doc_id},
                  {"department", o.department},
                  {"stage", StageName(o.stage)},
                  {"status", o.ok ? "ok" : "error"}};
    if (!o.ok) entry["error"] = o.error;
    if (!o.warnings.empty()) entry["warnings"] = o.warnings;
    doc_list.push_back(std::move(entry));
  }
  manifest["documents"] = std::move(doc_list);
  json issues = json::array();
  for (const auto& issue : corpus.issues) {
    issues.push_back({{"department", issue.department},
                      {"doc_id", issue.doc_id},
                      {"error", std::string(ErrorCodeName(issue.code))},
                      {"message", issue.message}});
  }
  manifest["load_issues"] = std::move(issues);
  manifest["missing_conclusions"] = result.missing_conclusions;
  manifest["errors"] = result.errors;
  const fs::path manifest_path = tree / "manifest.json";
  manifest["outputs"] = OutputHashes(tree, manifest_path);
  const std::string text = manifest.dump(1) + "\n";
  WriteFile(manifest_path, text);
  result.manifest_sha256 = Sha256Hex(text);
  return result;
}

std::vector<std::vector<std::string>> ComparisonRows(const ExperimentConfig& cfg,
                                                     const ExperimentResult& with,
                                                     const ExperimentResult& without) {
  auto ok_count = [](const ExperimentResult& r) {
    std::size_t n = 0;
    for (const auto& d : r.documents) n += d.ok;
    return n;
  };
  struct Best {
    double f = -1;
    std::string label;
  };
  auto best = [](const ExperimentResult& r) {
    Best b;
    for (const auto& row : r.report.departments) {
      for (RougeMetric m : kRougeMetrics) {
        const double f = row.scores[static_cast<std::size_t>(m)].f;
        if (f > b.f) {
          b.f = f;
          b.label = MetricLabel(m) + ", " + row.department;
        }
      }
    }
    return b;
  };
  auto avg_f = [](const ExperimentResult& r, RougeMetric m) {
    return r.report.average.scores[static_cast<std::size_t>(m)].f;
  };
  const std::string split = Percent(cfg.split.train) + " training, " + Percent(cfg.split.val) +
                            " validation, " + Percent(cfg.split.test) + " testing";
  const Best b1 = best(with);
  const Best b2 = best(without);
  auto best_text = [](const Best& b) {
    return b.f < 0 ? std::string("n/a") : Fixed(b.f * 100.0, 2) + "% (" + b.label + ")";
  };
  const bool same_place = b1.label == b2.label;

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"Feature", "Experiment 1", "Experiment 2", "Remarks"});
  rows.push_back({"Dataset", "Research papers including conclusion sections",
                  "Research papers excluding conclusion sections",
                  "Difference in inclusion of conclusion sections."});
  // Wall-clock figures would make the hashed outputs machine dependent.
  rows.push_back({"Training Time", "not recorded", "not recorded",
                  "Timing is printed by the CLI and kept out of hashed outputs."});
  rows.push_back({"Data Split Ratio", split, split,
                  "Identical data splits used in both experiments."});
  rows.push_back({"Best Evaluation Result", best_text(b1), best_text(b2),
                  same_place ? "Both results achieved in the same evaluation metric and domain."
                             : "Results achieved in different metrics or domains."});
  rows.push_back({"Documents", std::to_string(ok_count(with)), std::to_string(ok_count(without)),
                  std::to_string(without.missing_conclusions) +
                      " documents had no conclusion span."});
  const double w1 = with.body_stats.overall;
  const double w2 = without.body_stats.overall;
  rows.push_back({"Average Word Count", Fixed(w1, 2), Fixed(w2, 2),
                  "Difference of " + Fixed(w1 - w2, 2) + " words."});
  rows.push_back({"Summary Word Limit", std::to_string(cfg.word_limit),
                  std::to_string(cfg.word_limit), "Same limit for both experiments."});
  for (RougeMetric m : kRougeMetrics) {
    const double f1 = avg_f(with, m);
    const double f2 = avg_f(without, m);
    rows.push_back({"Average " + MetricLabel(m) + " F", FormatFixed6(f1), FormatFixed6(f2),
                    f2 > f1   ? "Higher without conclusions."
                    : f2 < f1 ? "Higher with conclusions."
                              : "No difference."});
  }
  return rows;
}

std::string RenderComparisonMarkdown(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out += "|";
    for (const std::string& cell : rows[r]) out += " " + cell + " |";
    out += "\n";
    if (r == 0) {
      out += "|";
      for (std::size_t c = 0; c < rows[r].size(); ++c) out += "---|";
      out += "\n";
    }
  }
  return out;
}

ExperimentRun RunExperiment(const ExperimentConfig& cfg) {
  cfg.Validate();
  const LoadedCorpus corpus = LoadCorpus(cfg.corpus_dir);
  ExperimentRun run;
  std::vector<bool> modes;
  if (cfg.compare) {
    modes = {true, false};
  } else {
    modes = {cfg.include_conclusions};
  }
  for (bool include : modes) {
    const fs::path tree =
        cfg.output_root / (include ? "with_conclusion" : "without_conclusion");
    run.conditions.push_back(RunCondition(cfg, corpus, include, tree));
  }

  json top;
  top["version"] = 1;
  json conditions = json::object();
  for (const auto& c : run.conditions) {
    conditions[c.name] = {{"manifest_sha256", c.manifest_sha256}, {"errors", c.errors}};
  }
  top["conditions"] = std::move(conditions);
  if (cfg.compare) {
    const auto rows = ComparisonRows(cfg, run.conditions[0], run.conditions[1]);
    std::string csv_text;
    for (const auto& row : rows) csv_text += csv::FormatRow(row);
    const std::string md = RenderComparisonMarkdown(rows);
    WriteFile(cfg.output_root / "comparison.csv", csv_text);
    WriteFile(cfg.output_root / "comparison.md", md);
    top["comparison"] = {{"comparison.csv", Sha256Hex(csv_text)},
                         {"comparison.md", Sha256Hex(md)}};
  }
  // Load issues are shared by every condition; count them once.
  for (const auto& c : run.conditions) run.errors += c.errors - corpus.issues.size();
  run.errors += corpus.issues.size();
  top["errors"] = run.errors;
  const std::string text = top.dump(1) + "\n";
  WriteFile(cfg.output_root / "manifest.json", text);
  run.manifest_sha256 = Sha256Hex(text);
  return run;
}

}  // namespace ats
