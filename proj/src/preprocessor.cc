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

#include "ats/preprocessor.h"

#include <algorithm>

#include "ats/error.h"
#include "ats/file_util.h"
#include "ats/utf8.h"
#include "json.hpp"

namespace ats {
namespace {

std::size_t LetterCount(std::u32string_view s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char32_t c) { return c != utf8::kZwnj; }));
}

std::u32string ToU32(std::string_view s) {
  const auto cps = utf8::ToCodepoints(s);
  return std::u32string(cps.begin(), cps.end());
}

std::string FromU32(std::u32string_view s) {
  return utf8::FromCodepoints(std::vector<char32_t>(s.begin(), s.end()));
}

std::string XmlEscape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string RenderToken(const Token& tok) {
  return tok.is_punctuation ? tok.stem : "_" + tok.stem + "_";
}

}  // namespace

std::string_view StopwordSourceName(StopwordSource source) {
  switch (source) {
    case StopwordSource::kNone: return "none";
    case StopwordSource::kGeneral: return "general";
    case StopwordSource::kDomain: return "domain";
  }
  return "none";
}

bool IsPunctuationToken(std::string_view token) {
  if (token.empty()) return false;
  for (char32_t cp : utf8::ToCodepoints(token)) {
    if (!utf8::IsPunctuation(cp)) return false;
  }
  return true;
}

std::vector<std::string> Tokenize(std::string_view sentence) {
  std::vector<std::string> tokens;
  for (std::string_view chunk : utf8::SplitWhitespace(sentence)) {
    const auto cps = utf8::ToCodepoints(chunk);
    std::size_t begin = 0;
    std::size_t end = cps.size();
    while (begin < end && utf8::IsPunctuation(cps[begin])) {
      tokens.push_back(utf8::Encode(cps[begin]));
      ++begin;
    }
    std::vector<std::string> trailing;
    while (end > begin && utf8::IsPunctuation(cps[end - 1])) {
      trailing.push_back(utf8::Encode(cps[end - 1]));
      --end;
    }
    if (begin < end) {
      tokens.push_back(utf8::FromCodepoints(
          std::vector<char32_t>(cps.begin() + begin, cps.begin() + end)));
    }
    tokens.insert(tokens.end(), trailing.rbegin(), trailing.rend());
  }
  return tokens;
}

Stemmer::Stemmer(std::vector<std::string> suffixes, int max_strips,
                 std::size_t min_stem_letters)
    : suffixes_(std::move(suffixes)),
      max_strips_(max_strips),
      min_stem_letters_(min_stem_letters) {
  std::erase_if(suffixes_, [](const std::string& s) { return s.empty(); });
  std::stable_sort(suffixes_.begin(), suffixes_.end(),
                   [](const std::string& a, const std::string& b) {
                     return utf8::Length(a) > utf8::Length(b);
                   });
}

Stemmer Stemmer::Default() {
  return Stemmer({"ەکان", "ان", "ێکی", "ێک", "ی", "ە", "دا", "ەوە", "یش"});
}

Stemmer Stemmer::Load(const std::filesystem::path& path) {
  const std::string text = ReadFile(path);
  std::vector<std::string> suffixes;
  std::string_view rest = text;
  while (!rest.empty()) {
    const std::size_t nl = rest.find('\n');
    std::string_view line = rest.substr(0, nl);
    rest = nl == std::string_view::npos ? std::string_view() : rest.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = utf8::Trim(line);
    if (!line.empty()) suffixes.emplace_back(line);
  }
  return Stemmer(std::move(suffixes));
}

std::string Stemmer::Stem(std::string_view surface) const {
  if (surface.empty() || IsPunctuationToken(surface)) return std::string(surface);
  std::u32string word = ToU32(surface);
  bool stripped = false;
  for (int step = 0; step < max_strips_; ++step) {
    bool matched = false;
    for (const std::string& suffix : suffixes_) {
      const std::u32string s = ToU32(suffix);
      if (word.size() <= s.size() || !std::u32string_view(word).ends_with(s)) {
        continue;
      }
      std::u32string_view rest(word.data(), word.size() - s.size());
      while (!rest.empty() && rest.back() == utf8::kZwnj) rest.remove_suffix(1);
      if (LetterCount(rest) < min_stem_letters_) continue;
      word = std::u32string(rest);
      matched = stripped = true;
      break;
    }
    if (!matched) break;
  }
  return stripped ? FromU32(word) : std::string(surface);
}

StopwordList LoadStopwords(const std::filesystem::path& dir,
                           const NormalizationConfig& cfg,
                           const Stemmer& stemmer) {
  StopwordList lists;
  for (const auto& path : ListFilesRecursive(dir)) {
    if (path.extension() != ".json") continue;
    std::set<std::string> entries;
    std::string department;
    try {
      const nlohmann::json j = nlohmann::json::parse(ReadFile(path));
      department = j.at("department").get<std::string>();
      for (const auto& w : j.at("stopwords")) {
        const std::string norm =
            std::string(utf8::Trim(Normalize(w.get<std::string>(), cfg, true)));
        if (!norm.empty()) entries.insert(stemmer.Stem(norm));
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kMalformedStopwords, path.string() + ": " + e.what());
    }
    if (path.filename() == "general.json") {
      lists.general.insert(entries.begin(), entries.end());
    } else {
      lists.domain[department].insert(entries.begin(), entries.end());
    }
  }
  return lists;
}

StopwordResult RemoveStopwords(std::vector<Token> tokens,
                               const StopwordList& lists,
                               std::string_view department, bool strict) {
  StopwordResult result;
  const std::set<std::string>* domain = nullptr;
  if (auto it = lists.domain.find(std::string(department));
      it != lists.domain.end()) {
    domain = &it->second;
  } else {
    if (strict) {
      throw Error(ErrorCode::kUnknownDepartment,
                  "no stopword list for department '" + std::string(department) + "'");
    }
    result.department_known = false;
  }
  for (Token& tok : tokens) {
    StopwordSource source = StopwordSource::kNone;
    if (lists.general.count(tok.stem)) {
      source = StopwordSource::kGeneral;
    } else if (domain != nullptr && domain->count(tok.stem)) {
      source = StopwordSource::kDomain;
    }
    tok.is_stopword = source != StopwordSource::kNone;
    tok.stopword_source = source;
    if (tok.is_stopword) {
      result.log.push_back({tok.surface, source});
      result.removed.push_back(tok);
    } else {
      result.kept.push_back(tok);
    }
    result.flagged.push_back(std::move(tok));
  }
  return result;
}

ProcessedDocument PreprocessDocument(std::string doc_id, std::string department,
                                     std::string_view normalized_text,
                                     const SegmenterModel& model,
                                     const StopwordList& stopwords,
                                     const Stemmer& stemmer,
                                     const PreprocessOptions& options) {
  ProcessedDocument doc;
  doc.doc_id = std::move(doc_id);
  doc.department = std::move(department);
  bool warned = false;
  for (SentenceSpan& span : Segment(model, normalized_text)) {
    ProcessedSentence sentence;
    const std::size_t index = doc.sentences.size();
    std::vector<Token> tokens;
    for (std::string& surface : Tokenize(span.text)) {
      Token tok;
      tok.stem = stemmer.Stem(surface);
      tok.is_punctuation = IsPunctuationToken(surface);
      tok.surface = std::move(surface);
      tok.sentence_index = index;
      tokens.push_back(std::move(tok));
    }
    StopwordResult r = RemoveStopwords(std::move(tokens), stopwords, doc.department,
                                       options.strict_departments);
    if (!r.department_known && !warned) {
      doc.warnings.push_back("unknown department '" + doc.department +
                             "': domain stopwords skipped");
      warned = true;
    }
    doc.removed_stopwords.insert(doc.removed_stopwords.end(), r.log.begin(),
                                 r.log.end());
    sentence.span = std::move(span);
    sentence.tokens = std::move(r.flagged);
    doc.counts.tokens += sentence.tokens.size();
    doc.sentences.push_back(std::move(sentence));
  }
  doc.counts.removed = doc.removed_stopwords.size();
  return doc;
}

std::string RenderSentenceStems(const ProcessedSentence& sentence) {
  std::string line;
  for (const Token& tok : sentence.tokens) {
    if (tok.is_stopword) continue;
    if (!line.empty()) line.push_back(' ');
    line += RenderToken(tok);
  }
  return line;
}

std::string RenderProcessedText(const ProcessedDocument& doc) {
  std::string out;
  for (const auto& s : doc.sentences) out += RenderSentenceStems(s) + "\n";
  return out;
}

std::string RenderProcessedXml(const ProcessedDocument& doc) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<doc id=\"" + XmlEscape(doc.doc_id) + "\" department=\"" +
         XmlEscape(doc.department) + "\">\n";
  for (const auto& s : doc.sentences) {
    out += "<s>" + XmlEscape(RenderSentenceStems(s)) + "</s>\n";
  }
  out += "</doc>\n";
  return out;
}

std::string RenderDebug(const ProcessedDocument& doc) {
  std::string out = "Stop words removed one by one: (";
  for (std::size_t i = 0; i < doc.removed_stopwords.size(); ++i) {
    if (i) out += " , ";
    out += doc.removed_stopwords[i].surface;
  }
  out += ")\nNumber of stop words removed: " + std::to_string(doc.counts.removed) +
         "\n";
  return out;
}

std::string RenderTokens(const ProcessedDocument& doc) {
  std::string out;
  for (const auto& s : doc.sentences) {
    for (const Token& tok : s.tokens) out += RenderToken(tok) + "\n";
  }
  return out;
}

void WritePreprocessArtifacts(const ProcessedDocument& doc,
                              const std::filesystem::path& process_dir) {
  const std::string& id = doc.doc_id;
  WriteFile(process_dir / ("Processed_" + id + ".txt"), RenderProcessedText(doc));
  WriteFile(process_dir / ("Processed_" + id + ".xml"), RenderProcessedXml(doc));
  WriteFile(process_dir / ("Debug_" + id + ".txt"), RenderDebug(doc));
  WriteFile(process_dir / ("Processed_" + id + "_tokens.txt"), RenderTokens(doc));
}

}  // namespace ats
