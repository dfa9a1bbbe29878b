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

// Command-line front end for the summarization toolkit.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ats/corpus.h"
#include "ats/error.h"
#include "ats/evaluator.h"
#include "ats/experiment.h"
#include "ats/file_util.h"
#include "ats/normalizer.h"
#include "ats/preprocessor.h"
#include "ats/scorer.h"
#include "ats/segmenter.h"
#include "ats/summarizer.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDocumentErrors = 1;
constexpr int kExitFatal = 2;

struct Shared {
  std::string charmap;
  std::string suffixes;
};

ats::NormalizationConfig NormConfig(const Shared& s) {
  return s.charmap.empty() ? ats::NormalizationConfig::Default()
                           : ats::LoadNormalizationConfig(s.charmap);
}

ats::Stemmer StemmerOf(const Shared& s) {
  return s.suffixes.empty() ? ats::Stemmer::Default() : ats::Stemmer::Load(s.suffixes);
}

// "dir/<id>/body.txt" is named after its directory, anything else after its stem.
std::string DocIdOf(const fs::path& path) {
  if (path.filename() == "body.txt" && path.has_parent_path()) {
    return path.parent_path().filename().string();
  }
  return path.stem().string();
}

void PrintIssues(const ats::LoadedCorpus& corpus) {
  for (const auto& issue : corpus.issues) {
    std::cerr << "error: " << issue.department << "/" << issue.doc_id << ": "
              << issue.message << "\n";
  }
}

int RunNormalize(const Shared& s, bool keep_layout, const std::string& in, const std::string& out) {
  const auto cfg = NormConfig(s);
  ats::WriteFile(out, ats::Normalize(ats::ReadFile(in), cfg, keep_layout));
  return kExitOk;
}

int RunTrainSegmenter(const Shared& s, const std::string& corpus_dir, const std::string& out,
                      const ats::PunktParams& params) {
  const auto cfg = NormConfig(s);
  const auto files = ats::ListFilesRecursive(corpus_dir);
  bool has_bodies = false;
  for (const auto& f : files) has_bodies |= f.filename() == "body.txt";
  std::vector<std::string> texts;
  for (const auto& f : files) {
    if (has_bodies ? f.filename() == "body.txt" : f.extension() == ".txt") {
      texts.push_back(ats::Normalize(ats::ReadFile(f), cfg));
    }
  }
  const auto model = ats::TrainSegmenter(texts, params);
  ats::SaveModel(model, out);
  std::cout << "trained on " << texts.size() << " files: " << model.abbreviations.size()
            << " abbreviations, " << model.collocations.size() << " collocations, "
            << model.sentence_starters.size() << " sentence starters\n";
  return kExitOk;
}

int RunSegment(const Shared& s, const std::string& model_path, const std::string& in) {
  const auto model = ats::LoadModel(model_path);
  const std::string text = ats::Normalize(ats::ReadFile(in), NormConfig(s));
  for (const auto& span : ats::Segment(model, text)) std::cout << span.text << "\n";
  return kExitOk;
}

struct PipelineArgs {
  std::string model;
  std::string stopwords;
  std::string department;
  std::string out;
  std::vector<std::string> docs;
  bool strict = false;
};

// Runs `fn` per document, reporting failures without stopping the batch.
template <typename Fn>
int ForEachDocument(const Shared& s, const PipelineArgs& a, Fn&& fn) {
  const auto norm = NormConfig(s);
  const auto stemmer = StemmerOf(s);
  const auto lists = ats::LoadStopwords(a.stopwords, norm, stemmer);
  const auto model = ats::LoadModel(a.model);
  ats::PreprocessOptions options;
  options.strict_departments = a.strict;
  int errors = 0;
  for (const std::string& path : a.docs) {
    try {
      const std::string text = ats::Normalize(ats::ReadFile(path), norm);
      const auto doc = ats::PreprocessDocument(DocIdOf(path), a.department, text, model, lists,
                                               stemmer, options);
      for (const auto& w : doc.warnings) std::cerr << "warning: " << path << ": " << w << "\n";
      fn(doc);
    } catch (const std::exception& e) {
      std::cerr << "error: " << path << ": " << e.what() << "\n";
      ++errors;
    }
  }
  return errors == 0 ? kExitOk : kExitDocumentErrors;
}

int RunPreprocess(const Shared& s, const PipelineArgs& a, bool with_scores) {
  return ForEachDocument(s, a, [&](const ats::ProcessedDocument& doc) {
    ats::WritePreprocessArtifacts(doc, a.out);
    if (with_scores) ats::WriteScoreArtifacts(doc, ats::ScoreDocument(doc), a.out);
  });
}

int RunSummarize(const Shared& s, const PipelineArgs& a, std::int64_t limit,
                 const std::string& process_dir) {
  if (limit < 1) throw ats::Error(ats::ErrorCode::kInvalidLimit, "--limit must be >= 1");
  return ForEachDocument(s, a, [&](const ats::ProcessedDocument& doc) {
    const auto scored = ats::ScoreDocument(doc);
    if (!process_dir.empty()) {
      ats::WritePreprocessArtifacts(doc, process_dir);
      ats::WriteScoreArtifacts(doc, scored, process_dir);
    }
    const fs::path out(a.out);
    const auto full = ats::ExtractFullSummary(doc, scored);
    const auto final_summary = ats::ExtractFinalSummary(doc, scored, limit);
    ats::WriteFile(out / (doc.doc_id + ".full.txt"), ats::RenderSummaryText(full));
    ats::WriteFile(out / (doc.doc_id + ".final.txt"), ats::RenderSummaryText(final_summary));
    ats::WriteSummaryState(final_summary, out / (doc.doc_id + ".state.txt"));
  });
}

int RunEvaluate(const Shared& s, const std::string& candidate, const std::string& reference,
                const std::string& out) {
  const auto norm = NormConfig(s);
  const std::string cand = ats::Normalize(ats::ReadFile(candidate), norm);
  const std::string ref = ats::Normalize(ats::ReadFile(reference), norm);
  const std::string csv = ats::RenderDocumentCsv(ats::EvaluateDocument(cand, ref));
  if (out.empty()) {
    std::cout << csv;
  } else {
    ats::WriteFile(out, csv);
  }
  return kExitOk;
}

int RunSplit(const Shared& s, const std::string& corpus_dir, const std::string& out,
             const ats::SplitSpec& spec) {
  const auto norm = NormConfig(s);
  auto corpus = ats::LoadCorpus(corpus_dir);
  PrintIssues(corpus);
  for (auto& d : corpus.documents) {
    d.body = ats::Normalize(d.body, norm);
    d.abstract = ats::Normalize(d.abstract, norm);
  }
  const auto splits = ats::SplitCorpus(corpus.documents, spec);
  ats::WriteSplitCsvs(corpus.documents, splits, out);
  for (const auto& sp : splits) {
    std::cout << sp.department << ": " << sp.train.size() << " train, " << sp.val.size()
              << " val, " << sp.test.size() << " test\n";
  }
  return corpus.issues.empty() ? kExitOk : kExitDocumentErrors;
}

void PrintStats(const char* title, const ats::WordStats& stats) {
  std::printf("%s\n", title);
  for (const auto& [dept, mean] : stats.department_means) {
    std::printf("  %-24s %6zu docs  %10.2f words\n", dept.c_str(),
                stats.department_counts.at(dept), mean);
  }
  std::printf("  %-24s %16s %10.2f words\n", "Average", "", stats.overall);
}

int RunStats(const std::string& corpus_dir) {
  const auto corpus = ats::LoadCorpus(corpus_dir);
  PrintIssues(corpus);
  std::vector<ats::CorpusDocument> stripped;
  std::size_t missing = 0;
  for (const auto& d : corpus.documents) stripped.push_back(ats::StripConclusion(d, &missing));
  PrintStats("abstract word count", ats::AbstractWordStats(corpus.documents));
  PrintStats("body word count, with conclusion", ats::BodyWordStats(corpus.documents));
  PrintStats("body word count, without conclusion", ats::BodyWordStats(stripped));
  std::printf("documents without a conclusion span: %zu\n", missing);
  return corpus.issues.empty() ? kExitOk : kExitDocumentErrors;
}

int RunExperimentCommand(const std::string& config) {
  const auto cfg = ats::LoadExperimentConfig(config);
  const auto started = std::chrono::steady_clock::now();
  const auto run = ats::RunExperiment(cfg);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
  for (const auto& c : run.conditions) {
    for (const auto& d : c.documents) {
      if (!d.ok) std::cerr << "error: " << c.name << ": " << d.doc_id << ": " << d.error << "\n";
    }
    std::cout << c.name << ": " << c.documents.size() << " documents, " << c.errors
              << " errors, average ROUGE-1 F "
              << ats::FormatFixed6(c.report.average.scores[0].f) << "\n";
  }
  std::cout << "manifest sha256 " << run.manifest_sha256 << "\n";
  std::printf("elapsed %.2f s\n", elapsed.count());
  return run.errors == 0 ? kExitOk : kExitDocumentErrors;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extractive summarization toolkit for Sorani Kurdish research documents"};
  app.require_subcommand(1);
  Shared shared;
  auto add_shared = [&](CLI::App* sub) {
    sub->add_option("--charmap", shared.charmap, "character substitution table");
    sub->add_option("--suffixes", shared.suffixes, "stemmer suffix inventory");
  };
  int status = kExitOk;
  std::function<int()> action;

  auto* normalize = app.add_subcommand("normalize", "normalize a raw text file");
  std::string in, out;
  bool keep_layout = false;
  add_shared(normalize);
  normalize->add_flag("--keep-layout", keep_layout, "repair line structure instead of flattening");
  normalize->add_option("in", in)->required();
  normalize->add_option("out", out)->required();
  normalize->callback([&] { action = [&] { return RunNormalize(shared, keep_layout, in, out); }; });

  auto* train = app.add_subcommand("train-segmenter", "learn a sentence segmentation model");
  std::string corpus_dir, model_out;
  ats::PunktParams punkt;
  add_shared(train);
  train->add_option("--corpus", corpus_dir)->required();
  train->add_option("--out", model_out)->required();
  train->add_option("--abbrev-threshold", punkt.abbrev_threshold);
  train->add_option("--colloc-threshold", punkt.colloc_threshold);
  train->add_option("--starter-threshold", punkt.starter_threshold);
  train->add_flag("--include-all-collocations", punkt.include_all_collocations);
  train->callback(
      [&] { action = [&] { return RunTrainSegmenter(shared, corpus_dir, model_out, punkt); }; });

  auto* segment = app.add_subcommand("segment", "print one sentence per line");
  std::string model_path;
  add_shared(segment);
  segment->add_option("--model", model_path)->required();
  segment->add_option("in", in)->required();
  segment->callback([&] { action = [&] { return RunSegment(shared, model_path, in); }; });

  PipelineArgs pipeline;
  auto add_pipeline = [&](CLI::App* sub) {
    add_shared(sub);
    sub->add_option("--model", pipeline.model, "segmenter model")->required();
    sub->add_option("--stopwords", pipeline.stopwords, "stopword directory")->required();
    sub->add_option("--department", pipeline.department)->required();
    sub->add_option("--out", pipeline.out, "output directory")->required();
    sub->add_flag("--strict-departments", pipeline.strict);
    sub->add_option("docs", pipeline.docs)->required();
  };
  auto* preprocess = app.add_subcommand("preprocess", "write preprocessing artifacts");
  bool with_scores = false;
  add_pipeline(preprocess);
  preprocess->add_flag("--with-scores", with_scores, "also write the sentence score files");
  preprocess->callback(
      [&] { action = [&] { return RunPreprocess(shared, pipeline, with_scores); }; });

  auto* summarize = app.add_subcommand("summarize", "write full and final summaries");
  std::int64_t limit = ats::kDefaultWordLimit;
  std::string process_dir;
  add_pipeline(summarize);
  summarize->add_option("--limit", limit, "final summary word limit")->capture_default_str();
  summarize->add_option("--process-dir", process_dir, "also write the seven artifacts here");
  summarize->callback(
      [&] { action = [&] { return RunSummarize(shared, pipeline, limit, process_dir); }; });

  auto* evaluate = app.add_subcommand("evaluate", "ROUGE-1/2/L of a candidate summary");
  std::string candidate, reference, eval_out;
  evaluate->add_option("--charmap", shared.charmap);
  evaluate->add_option("--candidate", candidate)->required();
  evaluate->add_option("--reference", reference)->required();
  evaluate->add_option("--out", eval_out, "CSV path; stdout if omitted");
  evaluate->callback(
      [&] { action = [&] { return RunEvaluate(shared, candidate, reference, eval_out); }; });

  auto* split = app.add_subcommand("split", "per-department train/val/test CSVs");
  ats::SplitSpec spec;
  std::string split_out;
  split->add_option("--charmap", shared.charmap);
  split->add_option("--corpus", corpus_dir)->required();
  split->add_option("--out", split_out)->required();
  split->add_option("--seed", spec.seed)->capture_default_str();
  split->add_option("--train", spec.train)->capture_default_str();
  split->add_option("--val", spec.val)->capture_default_str();
  split->add_option("--test", spec.test)->capture_default_str();
  split->callback([&] {
    action = [&] {
      if (split->count("--seed") == 0) {
        ats::ExperimentConfig env;
        env.split = spec;
        ats::ApplySeedOverride(env);
        spec.seed = env.split.seed;
      }
      spec.Validate();
      return RunSplit(shared, corpus_dir, split_out, spec);
    };
  });

  auto* stats = app.add_subcommand("stats", "abstract and body word statistics");
  stats->add_option("--corpus", corpus_dir)->required();
  stats->callback([&] { action = [&] { return RunStats(corpus_dir); }; });

  auto* experiment = app.add_subcommand("experiment", "run the configured experiment(s)");
  std::string config;
  experiment->add_option("--config", config)->required()->check(CLI::ExistingFile);
  experiment->callback([&] { action = [&] { return RunExperimentCommand(config); }; });

  CLI11_PARSE(app, argc, argv);
  try {
    status = action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    status = kExitFatal;
  }
  return status;
}
