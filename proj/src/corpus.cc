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

#include "ats/corpus.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "ats/csv.h"
#include "ats/file_util.h"
#include "ats/summarizer.h"
#include "ats/utf8.h"

namespace ats {

namespace fs = std::filesystem;

namespace {

std::vector<fs::path> SortedSubdirs(const fs::path& dir) {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_directory()) out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });
  return out;
}

WordStats Stats(const std::vector<CorpusDocument>& docs,
                std::string CorpusDocument::*field) {
  WordStats stats;
  std::map<std::string, double> sums;
  for (const auto& d : docs) {
    sums[d.department] += static_cast<double>(WordCount(d.*field));
    ++stats.department_counts[d.department];
  }
  for (const auto& [dept, sum] : sums) {
    stats.department_means[dept] =
        sum / static_cast<double>(stats.department_counts[dept]);
  }
  stats.overall = MeanOfMeans(stats.department_means);
  return stats;
}

std::size_t RoundHalfUp(double ratio, std::size_t n) {
  return static_cast<std::size_t>(std::floor(ratio * static_cast<double>(n) + 0.5 + 1e-9));
}

}  // namespace

ConclusionSpan ParseConclusionMeta(std::string_view text) {
  std::optional<ConclusionSpan> span;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto fields = utf8::SplitWhitespace(line);
    if (fields.empty()) continue;
    if (fields.size() != 3 || fields[0] != "conclusion" || span) {
      throw Error(ErrorCode::kMalformedMeta, "expected one 'conclusion <start> <end>' line");
    }
    ConclusionSpan s;
    for (int k = 1; k <= 2; ++k) {
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(fields[k].data(), fields[k].data() + fields[k].size(), v);
      if (ec != std::errc() || ptr != fields[k].data() + fields[k].size()) {
        throw Error(ErrorCode::kMalformedMeta, "bad offset '" + std::string(fields[k]) + "'");
      }
      (k == 1 ? s.start : s.end) = v;
    }
    if (s.start >= s.end) throw Error(ErrorCode::kMalformedMeta, "empty conclusion span");
    span = s;
  }
  if (!span) throw Error(ErrorCode::kMalformedMeta, "no conclusion line");
  return *span;
}

std::string RenderConclusionMeta(const ConclusionSpan& span) {
  return "conclusion " + std::to_string(span.start) + " " + std::to_string(span.end) + "\n";
}

LoadedCorpus LoadCorpus(const fs::path& root) {
  if (!fs::is_directory(root)) {
    throw Error(ErrorCode::kIoFailure, "corpus root is not a directory: " + root.string());
  }
  LoadedCorpus corpus;
  std::set<std::string> seen;
  for (const fs::path& dept_dir : SortedSubdirs(root)) {
    const std::string dept = dept_dir.filename().string();
    for (const fs::path& doc_dir : SortedSubdirs(dept_dir)) {
      const std::string id = doc_dir.filename().string();
      auto issue = [&](ErrorCode code, std::string msg) {
        corpus.issues.push_back({dept, id, code, std::move(msg)});
      };
      if (seen.count(id)) {
        issue(ErrorCode::kDuplicateId, "document id already used by another department");
        continue;
      }
      CorpusDocument doc;
      doc.doc_id = id;
      doc.department = dept;
      if (!fs::is_regular_file(doc_dir / "body.txt")) {
        issue(ErrorCode::kMissingBody, "body.txt not found");
        continue;
      }
      if (!fs::is_regular_file(doc_dir / "abstract.txt")) {
        issue(ErrorCode::kMissingAbstract, "abstract.txt not found");
        continue;
      }
      try {
        doc.body = ReadFile(doc_dir / "body.txt");
        doc.abstract = ReadFile(doc_dir / "abstract.txt");
        if (utf8::Trim(doc.body).empty()) {
          issue(ErrorCode::kMissingBody, "body.txt is empty");
          continue;
        }
        if (fs::is_regular_file(doc_dir / "conclusion.meta")) {
          const ConclusionSpan span = ParseConclusionMeta(ReadFile(doc_dir / "conclusion.meta"));
          if (span.end > utf8::Length(doc.body)) {
            throw Error(ErrorCode::kMalformedMeta, "conclusion span exceeds body length");
          }
          doc.conclusion = span;
        }
      } catch (const Error& e) {
        issue(e.code(), e.what());
        continue;
      }
      seen.insert(id);
      corpus.documents.push_back(std::move(doc));
    }
  }
  return corpus;
}

double MeanOfMeans(const std::map<std::string, double>& means) {
  if (means.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& [dept, m] : means) sum += m;
  return sum / static_cast<double>(means.size());
}

WordStats AbstractWordStats(const std::vector<CorpusDocument>& docs) {
  return Stats(docs, &CorpusDocument::abstract);
}

WordStats BodyWordStats(const std::vector<CorpusDocument>& docs) {
  return Stats(docs, &CorpusDocument::body);
}

CorpusDocument StripConclusion(const CorpusDocument& doc, std::size_t* missing) {
  if (!doc.conclusion) {
    if (missing != nullptr) ++*missing;
    return doc;
  }
  CorpusDocument out = doc;
  std::vector<char32_t> cps = utf8::ToCodepoints(doc.body);
  const std::size_t end = std::min(doc.conclusion->end, cps.size());
  const std::size_t start = std::min(doc.conclusion->start, end);
  cps.erase(cps.begin() + static_cast<std::ptrdiff_t>(start),
            cps.begin() + static_cast<std::ptrdiff_t>(end));
  out.body = utf8::FromCodepoints(cps);
  out.conclusion.reset();
  return out;
}

void SplitSpec::Validate() const {
  for (double r : {train, val, test}) {
    if (!(r > 0.0 && r < 1.0)) {
      throw Error(ErrorCode::kMalformedConfig, "split ratios must lie in (0, 1)");
    }
  }
  if (std::fabs(train + val + test - 1.0) > 1e-6) {
    throw Error(ErrorCode::kMalformedConfig, "split ratios must sum to 1");
  }
}

SplitCounts SplitSizes(std::size_t n, const SplitSpec& spec) {
  if (n < 3) {
    throw Error(ErrorCode::kTooFewDocuments,
                "need at least 3 documents per department, got " + std::to_string(n));
  }
  SplitCounts c;
  c.test = std::max<std::size_t>(1, RoundHalfUp(spec.test, n));
  c.val = std::max<std::size_t>(1, RoundHalfUp(spec.val, n));
  while (c.test + c.val > n - 1) {
    (c.val >= c.test && c.val > 1 ? c.val : c.test) -= 1;
  }
  c.train = n - c.test - c.val;
  return c;
}

std::uint64_t SplitMix64::Next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<std::string> SeededShuffle(std::vector<std::string> ids, std::uint64_t seed) {
  std::sort(ids.begin(), ids.end());
  SplitMix64 rng(seed);
  for (std::size_t i = ids.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.Next() % i);
    std::swap(ids[i - 1], ids[j]);
  }
  return ids;
}

std::string_view StageName(Stage stage) {
  switch (stage) {
    case Stage::kTrain: return "train";
    case Stage::kVal: return "val";
    case Stage::kTest: return "test";
  }
  return "train";
}

std::string_view StageFolder(Stage stage) {
  switch (stage) {
    case Stage::kTrain: return "training";
    case Stage::kVal: return "validation";
    case Stage::kTest: return "testing";
  }
  return "training";
}

const std::vector<std::string>& DepartmentSplit::ids(Stage stage) const {
  switch (stage) {
    case Stage::kTrain: return train;
    case Stage::kVal: return val;
    case Stage::kTest: return test;
  }
  return train;
}

std::vector<DepartmentSplit> SplitCorpus(const std::vector<CorpusDocument>& docs,
                                         const SplitSpec& spec) {
  spec.Validate();
  std::map<std::string, std::vector<std::string>> by_dept;
  for (const auto& d : docs) by_dept[d.department].push_back(d.doc_id);
  std::vector<DepartmentSplit> out;
  for (auto& [dept, ids] : by_dept) {
    const SplitCounts counts = SplitSizes(ids.size(), spec);
    const std::vector<std::string> shuffled = SeededShuffle(std::move(ids), spec.seed);
    DepartmentSplit split;
    split.department = dept;
    auto it = shuffled.begin();
    split.test.assign(it, it + static_cast<std::ptrdiff_t>(counts.test));
    it += static_cast<std::ptrdiff_t>(counts.test);
    split.val.assign(it, it + static_cast<std::ptrdiff_t>(counts.val));
    it += static_cast<std::ptrdiff_t>(counts.val);
    split.train.assign(it, shuffled.end());
    out.push_back(std::move(split));
  }
  return out;
}

std::string RenderSplitCsv(const std::vector<const CorpusDocument*>& rows) {
  std::string out = csv::FormatRow({"doc_id", "department", "body", "abstract"});
  for (const CorpusDocument* d : rows) {
    out += csv::FormatRow({d->doc_id, d->department, d->body, d->abstract});
  }
  return out;
}

void WriteSplitCsvs(const std::vector<CorpusDocument>& docs,
                    const std::vector<DepartmentSplit>& splits, const fs::path& dir) {
  std::map<std::string, const CorpusDocument*> by_id;
  for (const auto& d : docs) by_id[d.doc_id] = &d;
  for (const auto& split : splits) {
    for (Stage stage : kStages) {
      std::vector<const CorpusDocument*> rows;
      for (const std::string& id : split.ids(stage)) rows.push_back(by_id.at(id));
      WriteFile(dir / (split.department + "_" + std::string(StageName(stage)) + ".csv"),
                RenderSplitCsv(rows));
    }
  }
}

}  // namespace ats
