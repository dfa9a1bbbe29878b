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

#include "ats/evaluator.h"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <unordered_map>

#include "ats/csv.h"
#include "ats/error.h"
#include "ats/kernels.h"
#include "ats/utf8.h"

namespace ats {
namespace {

// Maps both token sequences onto a shared dense id space.
struct IdPair {
  std::vector<std::int32_t> a;
  std::vector<std::int32_t> b;
};

IdPair ToIds(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::unordered_map<std::string_view, std::int32_t> ids;
  auto id_of = [&](const std::string& tok) {
    auto [it, inserted] = ids.emplace(tok, static_cast<std::int32_t>(ids.size()));
    return it->second;
  };
  IdPair out;
  out.a.reserve(a.size());
  out.b.reserve(b.size());
  for (const auto& t : a) out.a.push_back(id_of(t));
  for (const auto& t : b) out.b.push_back(id_of(t));
  return out;
}

std::unordered_map<std::uint64_t, std::int64_t> NgramCounts(
    const std::vector<std::int32_t>& ids, int n) {
  std::unordered_map<std::uint64_t, std::int64_t> counts;
  for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= ids.size(); ++i) {
    std::uint64_t key = static_cast<std::uint32_t>(ids[i]);
    if (n == 2) key = (key << 32) | static_cast<std::uint32_t>(ids[i + 1]);
    ++counts[key];
  }
  return counts;
}

}  // namespace

std::string_view RougeMetricName(RougeMetric metric) {
  switch (metric) {
    case RougeMetric::kRouge1: return "rouge1";
    case RougeMetric::kRouge2: return "rouge2";
    case RougeMetric::kRougeL: return "rougeL";
  }
  return "rouge1";
}

RougeScore MakeRougeScore(RougeMetric metric, double precision, double recall) {
  RougeScore s;
  s.metric = metric;
  s.precision = precision;
  s.recall = recall;
  s.f = precision + recall > 0 ? 2 * precision * recall / (precision + recall) : 0.0;
  return s;
}

std::vector<std::string> EvaluationTokens(std::string_view text) {
  std::vector<std::string> out;
  for (std::string_view w : utf8::SplitWhitespace(text)) out.emplace_back(w);
  return out;
}

RougeScore RougeN(const std::vector<std::string>& candidate,
                  const std::vector<std::string>& reference, int n) {
  if (n != 1 && n != 2) throw std::invalid_argument("ROUGE-N supports n = 1, 2");
  const RougeMetric metric = n == 1 ? RougeMetric::kRouge1 : RougeMetric::kRouge2;
  const auto un = static_cast<std::size_t>(n);
  if (candidate.size() < un || reference.size() < un) return MakeRougeScore(metric, 0, 0);
  const IdPair ids = ToIds(candidate, reference);
  const auto cand = NgramCounts(ids.a, n);
  const auto ref = NgramCounts(ids.b, n);
  std::int64_t overlap = 0;
  for (const auto& [key, c] : cand) {
    if (auto it = ref.find(key); it != ref.end()) overlap += std::min(c, it->second);
  }
  const auto cand_total = static_cast<double>(candidate.size() - un + 1);
  const auto ref_total = static_cast<double>(reference.size() - un + 1);
  return MakeRougeScore(metric, static_cast<double>(overlap) / cand_total,
                        static_cast<double>(overlap) / ref_total);
}

RougeScore RougeN(std::string_view candidate, std::string_view reference, int n) {
  return RougeN(EvaluationTokens(candidate), EvaluationTokens(reference), n);
}

RougeScore RougeL(const std::vector<std::string>& candidate,
                  const std::vector<std::string>& reference) {
  if (candidate.empty() || reference.empty()) {
    return MakeRougeScore(RougeMetric::kRougeL, 0, 0);
  }
  const IdPair ids = ToIds(candidate, reference);
  const auto lcs = static_cast<double>(kernels::LcsLength(ids.a, ids.b));
  return MakeRougeScore(RougeMetric::kRougeL,
                        lcs / static_cast<double>(candidate.size()),
                        lcs / static_cast<double>(reference.size()));
}

RougeScore RougeL(std::string_view candidate, std::string_view reference) {
  return RougeL(EvaluationTokens(candidate), EvaluationTokens(reference));
}

DocumentScores EvaluateDocument(std::string_view summary, std::string_view reference) {
  const auto ref = EvaluationTokens(reference);
  if (ref.empty()) throw Error(ErrorCode::kMissingReference, "reference text is empty");
  const auto cand = EvaluationTokens(summary);
  return {RougeN(cand, ref, 1), RougeN(cand, ref, 2), RougeL(cand, ref)};
}

namespace {

ReportRow MeanRow(std::string label, const std::vector<const DocumentScores*>& rows) {
  ReportRow out;
  out.department = std::move(label);
  out.documents = rows.size();
  for (RougeMetric m : kRougeMetrics) {
    const auto k = static_cast<std::size_t>(m);
    double p = 0, r = 0, f = 0;
    for (const DocumentScores* s : rows) {
      p += (*s)[k].precision;
      r += (*s)[k].recall;
      f += (*s)[k].f;
    }
    const auto n = static_cast<double>(rows.size());
    out.scores[k] = RougeScore{m, rows.empty() ? 0 : p / n, rows.empty() ? 0 : r / n,
                               rows.empty() ? 0 : f / n};
  }
  return out;
}

}  // namespace

RougeReport Aggregate(const std::vector<DocumentScores>& scores,
                      const std::vector<std::string>& departments) {
  if (scores.size() != departments.size()) {
    throw std::invalid_argument("scores and department labels differ in length");
  }
  std::map<std::string, std::vector<const DocumentScores*>> by_dept;
  for (std::size_t i = 0; i < scores.size(); ++i) by_dept[departments[i]].push_back(&scores[i]);
  RougeReport report;
  std::vector<DocumentScores> dept_means;
  for (const auto& [dept, rows] : by_dept) {
    report.departments.push_back(MeanRow(dept, rows));
    dept_means.push_back(report.departments.back().scores);
  }
  std::vector<const DocumentScores*> ptrs;
  for (const auto& d : dept_means) ptrs.push_back(&d);
  report.average = MeanRow("Average", ptrs);
  report.average.documents = scores.size();
  return report;
}

std::string FormatFixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

std::string RenderDocumentCsv(const DocumentScores& scores) {
  std::string out = "metric,precision,recall,f\n";
  for (const RougeScore& s : scores) {
    out += std::string(RougeMetricName(s.metric)) + "," + FormatFixed6(s.precision) + "," +
           FormatFixed6(s.recall) + "," + FormatFixed6(s.f) + "\n";
  }
  return out;
}

std::string RenderReportCsv(const RougeReport& report) {
  std::string out = "metric,department,documents,precision,recall,f\n";
  for (RougeMetric m : kRougeMetrics) {
    const auto k = static_cast<std::size_t>(m);
    auto row = [&](const ReportRow& r) {
      out += std::string(RougeMetricName(m)) + "," + csv::EscapeField(r.department) + "," +
             std::to_string(r.documents) + "," + FormatFixed6(r.scores[k].precision) + "," +
             FormatFixed6(r.scores[k].recall) + "," + FormatFixed6(r.scores[k].f) + "\n";
    };
    for (const auto& r : report.departments) row(r);
    row(report.average);
  }
  return out;
}

}  // namespace ats
