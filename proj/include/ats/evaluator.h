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

#ifndef ATS_EVALUATOR_H_
#define ATS_EVALUATOR_H_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ats {

enum class RougeMetric { kRouge1 = 0, kRouge2 = 1, kRougeL = 2 };
inline constexpr std::array<RougeMetric, 3> kRougeMetrics = {
    RougeMetric::kRouge1, RougeMetric::kRouge2, RougeMetric::kRougeL};

std::string_view RougeMetricName(RougeMetric metric);  // rouge1, rouge2, rougeL

struct RougeScore {
  RougeMetric metric = RougeMetric::kRouge1;
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;
};

// F = 2PR / (P + R), or 0 when P + R == 0.
RougeScore MakeRougeScore(RougeMetric metric, double precision, double recall);

// Whitespace tokens. Callers normalize both sides with the same config.
std::vector<std::string> EvaluationTokens(std::string_view text);

// Clipped n-gram overlap; n must be 1 or 2. Either side with fewer than n
// tokens scores all zeros.
RougeScore RougeN(const std::vector<std::string>& candidate,
                  const std::vector<std::string>& reference, int n);
RougeScore RougeN(std::string_view candidate, std::string_view reference, int n);

// Token-level longest common subsequence.
RougeScore RougeL(const std::vector<std::string>& candidate,
                  const std::vector<std::string>& reference);
RougeScore RougeL(std::string_view candidate, std::string_view reference);

// Indexed by RougeMetric.
using DocumentScores = std::array<RougeScore, 3>;

// Throws Error(kMissingReference) when `reference` has no tokens.
DocumentScores EvaluateDocument(std::string_view summary, std::string_view reference);

struct ReportRow {
  std::string department;  // "Average" for the overall row
  std::size_t documents = 0;
  DocumentScores scores;
};

struct RougeReport {
  std::vector<ReportRow> departments;  // sorted by department id
  ReportRow average;                   // unweighted mean of department rows
};

// Per-department arithmetic means of P, R and F; the overall row averages
// the department rows. `departments[i]` labels `scores[i]`.
RougeReport Aggregate(const std::vector<DocumentScores>& scores,
                      const std::vector<std::string>& departments);

std::string FormatFixed6(double value);
// metric,precision,recall,f
std::string RenderDocumentCsv(const DocumentScores& scores);
// metric,department,documents,precision,recall,f; one block per metric,
// department rows then the Average row.
std::string RenderReportCsv(const RougeReport& report);

}  // namespace ats

#endif  // ATS_EVALUATOR_H_
