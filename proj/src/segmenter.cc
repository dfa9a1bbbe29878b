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

#include "ats/segmenter.h"

#include <cmath>

#include "ats/error.h"
#include "ats/file_util.h"
#include "ats/utf8.h"
#include "json.hpp"

namespace ats {
namespace punkt {
namespace {

constexpr std::string_view kNumberType = "##number##";

bool IsCloser(char32_t cp) {
  switch (cp) {
    case ')': case ']': case '}': case '"': case '\'': case 0x00BB:
    case 0x203A: case 0x201D: case 0x2019:
      return true;
    default:
      return false;
  }
}

// k * log(p), with 0 * log(0) == 0. `ok` cleared when the log is undefined.
double XLogP(double k, double p, bool& ok) {
  if (k == 0) return 0.0;
  if (p <= 0) {
    ok = false;
    return 0.0;
  }
  return k * std::log(p);
}

}  // namespace

double DunningLogLikelihood(double count_a, double count_b, double count_ab,
                            double n) {
  const double p1 = count_b / n;
  constexpr double p2 = 0.99;
  bool ok = true;
  const double null_hypo =
      XLogP(count_ab, p1, ok) + XLogP(count_a - count_ab, 1.0 - p1, ok);
  const double alt_hypo =
      XLogP(count_ab, p2, ok) + XLogP(count_a - count_ab, 1.0 - p2, ok);
  if (!ok) return -INFINITY;
  return -2.0 * (null_hypo - alt_hypo);
}

double CollocationLogLikelihood(double count_a, double count_b,
                                double count_ab, double n) {
  const double p = count_b / n;
  const double p1 = count_ab / count_a;
  const double p2 = n - count_a != 0 ? (count_b - count_ab) / (n - count_a) : 1.0;
  auto summand = [](double k1, double q1, double k2, double q2) {
    bool ok = true;
    const double v = XLogP(k1, q1, ok) + XLogP(k2, q2, ok);
    return ok ? v : 0.0;
  };
  const double rest = n - count_a - count_b + count_ab;
  const double s1 = summand(count_ab, p, count_a - count_ab, 1.0 - p);
  const double s2 = summand(count_b - count_ab, p, rest, 1.0 - p);
  const double s3 = (count_a == count_ab || p1 <= 0 || p1 >= 1)
                        ? 0.0
                        : summand(count_ab, p1, count_a - count_ab, 1.0 - p1);
  const double s4 = (count_b == count_ab || p2 <= 0 || p2 >= 1)
                        ? 0.0
                        : summand(count_b - count_ab, p2, rest, 1.0 - p2);
  return -2.0 * (s1 + s2 - s3 - s4);
}

TokenInfo AnalyzeToken(std::string_view token) {
  TokenInfo info;
  std::vector<char32_t> cps = utf8::ToCodepoints(token);
  std::size_t end = cps.size();
  while (end > 0 && IsCloser(cps[end - 1])) --end;
  std::size_t run = end;
  while (run > 0 && utf8::IsSentenceTerminal(cps[run - 1])) --run;
  for (std::size_t i = run; i < end; ++i) {
    if (cps[i] != '.') info.hard_final = true;
  }
  info.period_final = run < end && !info.hard_final;
  if (info.period_final) {
    end -= 1;
  } else if (info.hard_final) {
    end = run;
  }
  std::size_t begin = 0;
  while (begin < end && utf8::IsPunctuation(cps[begin])) ++begin;
  while (end > begin && utf8::IsPunctuation(cps[end - 1]) && cps[end - 1] != '.') {
    --end;
  }
  while (end > begin && cps[end - 1] == '.') --end;
  if (begin >= end) return info;

  info.has_word = true;
  const std::vector<char32_t> core(cps.begin() + begin, cps.begin() + end);
  bool number = utf8::IsDigit(core.front());
  for (char32_t cp : core) {
    if (!utf8::IsDigit(cp) && cp != '.' && cp != ',' && cp != '-') number = false;
  }
  info.is_number = number;
  info.is_initial = core.size() == 1 && !utf8::IsDigit(core[0]);
  info.type = number ? std::string(kNumberType)
                     : utf8::AsciiLower(utf8::FromCodepoints(core));
  return info;
}

}  // namespace punkt

namespace {

using punkt::TokenInfo;

struct Chunk {
  std::size_t byte_begin = 0;
  std::size_t byte_end = 0;
  TokenInfo info;
};

std::vector<Chunk> Chunks(std::string_view text) {
  std::vector<Chunk> chunks;
  for (std::string_view tok : utf8::SplitWhitespace(text)) {
    Chunk c;
    c.byte_begin = static_cast<std::size_t>(tok.data() - text.data());
    c.byte_end = c.byte_begin + tok.size();
    c.info = punkt::AnalyzeToken(tok);
    chunks.push_back(std::move(c));
  }
  return chunks;
}

struct TypeStats {
  std::int64_t with_period = 0;
  std::int64_t without_period = 0;
  std::int64_t total() const { return with_period + without_period; }
};

bool IsBreak(const TokenInfo& tok, const std::set<std::string>& abbreviations) {
  if (tok.hard_final) return true;
  if (!tok.period_final) return false;
  return !tok.has_word || !abbreviations.count(tok.type);
}

}  // namespace

SegmenterModel TrainSegmenter(const std::vector<std::string>& corpus,
                              const PunktParams& params) {
  std::vector<std::vector<TokenInfo>> docs;
  std::map<std::string, TypeStats> stats;
  std::int64_t n = 0;
  std::int64_t period_tokens = 0;
  for (const std::string& text : corpus) {
    std::vector<TokenInfo> toks;
    for (Chunk& c : Chunks(text)) {
      ++n;
      if (c.info.period_final) ++period_tokens;
      if (c.info.has_word) {
        auto& s = stats[c.info.type];
        (c.info.period_final ? s.with_period : s.without_period) += 1;
      }
      toks.push_back(std::move(c.info));
    }
    docs.push_back(std::move(toks));
  }
  if (n == 0) throw Error(ErrorCode::kEmptyCorpus, "corpus has no tokens");

  SegmenterModel model;
  model.params = params;
  for (const auto& [type, s] : stats) model.type_counts[type] = s.total();
  const double total = static_cast<double>(n);

  // Abbreviations: period-final types whose period co-occurrence is far above
  // the corpus rate, discounted by length and by period-less occurrences.
  for (const auto& [type, s] : stats) {
    if (s.with_period == 0 || type == punkt::kNumberType) continue;
    const auto length = static_cast<double>(utf8::Length(type));
    double periods = 1;
    for (char c : type) periods += c == '.';
    const double nonperiods = length - periods + 1;
    const double ll = punkt::DunningLogLikelihood(
        static_cast<double>(s.total()), static_cast<double>(period_tokens),
        static_cast<double>(s.with_period), total);
    const double score = ll * std::exp(-nonperiods) * periods *
                         std::pow(nonperiods, -static_cast<double>(s.without_period));
    if (score >= params.abbrev_threshold) model.abbreviations.insert(type);
  }

  // Sentence starters: types following a boundary much more often than chance.
  std::map<std::string, std::int64_t> after_break;
  std::int64_t break_count = 0;
  std::map<std::pair<std::string, std::string>, std::int64_t> pairs;
  for (const auto& toks : docs) {
    for (std::size_t i = 0; i < toks.size(); ++i) {
      const TokenInfo& tok = toks[i];
      const bool is_break = IsBreak(tok, model.abbreviations);
      if (is_break) ++break_count;
      if (i + 1 >= toks.size()) continue;
      const TokenInfo& next = toks[i + 1];
      if (is_break && next.has_word) ++after_break[next.type];
      if (!tok.period_final || !tok.has_word || !next.has_word) continue;
      const bool potential = params.include_all_collocations ||
                             (is_break && (tok.is_number || tok.is_initial));
      if (potential) ++pairs[{tok.type, next.type}];
    }
  }
  for (const auto& [type, at_break] : after_break) {
    const std::int64_t count = stats[type].total();
    if (count < at_break || break_count == 0) continue;
    const double ll = punkt::CollocationLogLikelihood(
        static_cast<double>(break_count), static_cast<double>(count),
        static_cast<double>(at_break), total);
    if (ll >= params.starter_threshold &&
        total / static_cast<double>(break_count) >
            static_cast<double>(count) / static_cast<double>(at_break)) {
      model.sentence_starters.insert(type);
    }
  }

  for (const auto& [pair, col_count] : pairs) {
    if (model.sentence_starters.count(pair.second)) continue;
    const std::int64_t c1 = stats[pair.first].total();
    const std::int64_t c2 = stats[pair.second].total();
    if (c1 <= 1 || c2 <= 1 || col_count <= params.min_colloc_freq ||
        col_count > std::min(c1, c2)) {
      continue;
    }
    const double ll = punkt::CollocationLogLikelihood(
        static_cast<double>(c1), static_cast<double>(c2),
        static_cast<double>(col_count), total);
    if (ll >= params.colloc_threshold &&
        total / static_cast<double>(c1) >
            static_cast<double>(c2) / static_cast<double>(col_count)) {
      model.collocations.insert(pair);
    }
  }
  return model;
}

std::vector<SentenceSpan> Segment(const SegmenterModel& model,
                                  std::string_view text) {
  const std::vector<Chunk> chunks = Chunks(text);
  std::vector<std::size_t> cuts;  // byte offsets where a sentence ends
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    const TokenInfo& tok = chunks[i].info;
    if (!tok.hard_final && !tok.period_final) continue;
    bool boundary = true;
    if (tok.period_final && tok.has_word && i + 1 < chunks.size()) {
      const TokenInfo& next = chunks[i + 1].info;
      if (model.collocations.count({tok.type, next.type})) {
        boundary = false;
      } else if (model.abbreviations.count(tok.type) &&
                 !model.sentence_starters.count(next.type)) {
        boundary = false;
      }
    }
    if (boundary) cuts.push_back(chunks[i].byte_end);
  }
  if (chunks.empty()) return {};
  if (cuts.empty() || cuts.back() != chunks.back().byte_end) {
    cuts.push_back(chunks.back().byte_end);
  }

  std::vector<SentenceSpan> spans;
  std::size_t chunk = 0;
  std::size_t byte_pos = 0;
  std::size_t cp_pos = 0;
  auto advance_to = [&](std::size_t target) {
    while (byte_pos < target) {
      byte_pos += utf8::Decode(text, byte_pos).length;
      ++cp_pos;
    }
  };
  for (std::size_t cut : cuts) {
    SentenceSpan span;
    advance_to(chunks[chunk].byte_begin);
    span.byte_start = byte_pos;
    span.start = cp_pos;
    advance_to(cut);
    span.byte_end = byte_pos;
    span.end = cp_pos;
    span.text = std::string(text.substr(span.byte_start, span.byte_end - span.byte_start));
    spans.push_back(std::move(span));
    while (chunk < chunks.size() && chunks[chunk].byte_end <= cut) ++chunk;
    if (chunk >= chunks.size()) break;
  }
  return spans;
}

std::string SerializeModel(const SegmenterModel& model) {
  nlohmann::json j;
  j["version"] = SegmenterModel::kVersion;
  j["params"] = {
      {"abbrev_threshold", model.params.abbrev_threshold},
      {"colloc_threshold", model.params.colloc_threshold},
      {"starter_threshold", model.params.starter_threshold},
      {"min_colloc_freq", model.params.min_colloc_freq},
      {"include_all_collocations", model.params.include_all_collocations},
  };
  j["abbreviations"] = model.abbreviations;
  nlohmann::json collocs = nlohmann::json::array();
  for (const auto& [a, b] : model.collocations) collocs.push_back({a, b});
  j["collocations"] = std::move(collocs);
  j["sentence_starters"] = model.sentence_starters;
  j["type_counts"] = model.type_counts;
  return j.dump(1) + "\n";
}

SegmenterModel ParseModel(std::string_view json) {
  try {
    const nlohmann::json j = nlohmann::json::parse(json);
    if (!j.is_object() || !j.contains("version") ||
        j.at("version").get<int>() != SegmenterModel::kVersion) {
      throw Error(ErrorCode::kMalformedModel, "missing or unsupported version");
    }
    SegmenterModel model;
    const auto& p = j.at("params");
    model.params.abbrev_threshold = p.at("abbrev_threshold").get<double>();
    model.params.colloc_threshold = p.at("colloc_threshold").get<double>();
    model.params.starter_threshold = p.at("starter_threshold").get<double>();
    model.params.min_colloc_freq = p.value("min_colloc_freq", std::int64_t{1});
    model.params.include_all_collocations =
        p.value("include_all_collocations", false);
    model.abbreviations = j.at("abbreviations").get<std::set<std::string>>();
    for (const auto& pair : j.at("collocations")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw Error(ErrorCode::kMalformedModel, "collocation must be a pair");
      }
      model.collocations.emplace(pair[0].get<std::string>(),
                                 pair[1].get<std::string>());
    }
    model.sentence_starters =
        j.at("sentence_starters").get<std::set<std::string>>();
    if (j.contains("type_counts")) {
      model.type_counts =
          j.at("type_counts").get<std::map<std::string, std::int64_t>>();
    }
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedModel, e.what());
  }
}

void SaveModel(const SegmenterModel& model, const std::filesystem::path& path) {
  WriteFile(path, SerializeModel(model));
}

SegmenterModel LoadModel(const std::filesystem::path& path) {
  return ParseModel(ReadFile(path));
}

}  // namespace ats
