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

#include "ats/summarizer.h"

#include <algorithm>
#include <charconv>

#include "ats/error.h"
#include "ats/file_util.h"
#include "ats/utf8.h"

namespace ats {
namespace {

SummarySentence MakeSentence(std::size_t index, std::string_view text) {
  SummarySentence s;
  s.sentence_index = index;
  s.text = SingleLine(text);
  s.word_count = WordCount(text);
  return s;
}

void Finish(Summary& summary) {
  std::sort(summary.selected.begin(), summary.selected.end(),
            [](const SummarySentence& a, const SummarySentence& b) {
              return a.sentence_index < b.sentence_index;
            });
  summary.total_words = 0;
  for (const auto& s : summary.selected) summary.total_words += s.word_count;
  summary.total_sentences = summary.selected.size();
}

std::string_view KindName(SummaryKind kind) {
  return kind == SummaryKind::kFull ? "full" : "final";
}

[[noreturn]] void BadState(const std::string& msg) {
  throw Error(ErrorCode::kMalformedState, msg);
}

std::size_t ParseCount(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    BadState("bad number '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::size_t WordCount(std::string_view text) {
  return utf8::SplitWhitespace(text).size();
}

std::string SingleLine(std::string_view text) {
  std::string out;
  for (std::string_view w : utf8::SplitWhitespace(text)) {
    if (!out.empty()) out.push_back(' ');
    out += w;
  }
  return out;
}

Summary ExtractFullSummary(const ProcessedDocument& doc, const ScoredDocument& scored) {
  Summary summary;
  summary.doc_id = doc.doc_id;
  summary.kind = SummaryKind::kFull;
  for (const SentenceScore& s : scored.scores) {
    if (s.retained) {
      summary.selected.push_back(
          MakeSentence(s.sentence_index, doc.sentences[s.sentence_index].span.text));
    }
  }
  Finish(summary);
  return summary;
}

Summary ExtractFinalSummary(std::string doc_id,
                            const std::vector<std::string>& sentence_texts,
                            const std::vector<std::size_t>& ranked,
                            std::int64_t word_limit) {
  if (word_limit < 1) {
    throw Error(ErrorCode::kInvalidLimit,
                "word limit must be >= 1, got " + std::to_string(word_limit));
  }
  Summary summary;
  summary.doc_id = std::move(doc_id);
  summary.kind = SummaryKind::kFinal;
  summary.word_limit = word_limit;
  const auto limit = static_cast<std::size_t>(word_limit);
  std::size_t total = 0;
  for (std::size_t idx : ranked) {
    SummarySentence s = MakeSentence(idx, sentence_texts[idx]);
    if (total + s.word_count > limit) continue;
    total += s.word_count;
    summary.selected.push_back(std::move(s));
  }
  if (summary.selected.empty() && !ranked.empty()) {
    summary.selected.push_back(MakeSentence(ranked.front(), sentence_texts[ranked.front()]));
    summary.override_applied = true;
  }
  Finish(summary);
  return summary;
}

Summary ExtractFinalSummary(const ProcessedDocument& doc, const ScoredDocument& scored,
                            std::int64_t word_limit) {
  std::vector<std::string> texts;
  texts.reserve(doc.sentences.size());
  for (const auto& s : doc.sentences) texts.push_back(s.span.text);
  return ExtractFinalSummary(doc.doc_id, texts, scored.ranked, word_limit);
}

std::string RenderSummaryText(const Summary& summary) {
  std::string out;
  for (const auto& s : summary.selected) out += s.text + "\n";
  return out;
}

std::string SummaryProse(const Summary& summary) {
  std::string out;
  for (const auto& s : summary.selected) {
    if (!out.empty()) out.push_back(' ');
    out += s.text;
  }
  return out;
}

SummaryState StateOf(const Summary& summary) {
  SummaryState st;
  st.doc_id = summary.doc_id;
  st.kind = summary.kind;
  st.word_limit = summary.word_limit;
  st.override_applied = summary.override_applied;
  for (const auto& s : summary.selected) st.sentences.emplace_back(s.sentence_index, s.word_count);
  st.total_words = summary.total_words;
  st.total_sentences = summary.total_sentences;
  return st;
}

std::string RenderSummaryState(const Summary& summary) {
  std::string out;
  out += "doc_id: " + summary.doc_id + "\n";
  out += "kind: " + std::string(KindName(summary.kind)) + "\n";
  out += "word_limit: " +
         (summary.word_limit ? std::to_string(*summary.word_limit) : std::string("none")) +
         "\n";
  out += std::string("override: ") + (summary.override_applied ? "true" : "false") + "\n";
  out += "sentences:\n";
  for (const auto& s : summary.selected) {
    out += "  sentence " + std::to_string(s.sentence_index) + ": " +
           std::to_string(s.word_count) + " words\n";
  }
  out += "total_words: " + std::to_string(summary.total_words) + "\n";
  out += "total_sentences: " + std::to_string(summary.total_sentences) + "\n";
  return out;
}

SummaryState ParseSummaryState(std::string_view text) {
  SummaryState st;
  bool in_sentences = false;
  int seen = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    if (line.empty()) continue;
    if (in_sentences && line.starts_with("  sentence ")) {
      line.remove_prefix(11);
      const std::size_t colon = line.find(": ");
      if (colon == std::string_view::npos || !line.ends_with(" words")) {
        BadState("bad sentence line");
      }
      const std::size_t idx = ParseCount(line.substr(0, colon));
      std::string_view words = line.substr(colon + 2);
      words.remove_suffix(6);
      st.sentences.emplace_back(idx, ParseCount(words));
      continue;
    }
    in_sentences = false;
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) BadState("expected key: value");
    const std::string_view key = line.substr(0, colon);
    std::string_view value = line.substr(colon + 1);
    if (value.starts_with(' ')) value.remove_prefix(1);
    ++seen;
    if (key == "doc_id") {
      st.doc_id = std::string(value);
    } else if (key == "kind") {
      if (value == "full") st.kind = SummaryKind::kFull;
      else if (value == "final") st.kind = SummaryKind::kFinal;
      else BadState("bad kind");
    } else if (key == "word_limit") {
      if (value != "none") st.word_limit = static_cast<std::int64_t>(ParseCount(value));
    } else if (key == "override") {
      if (value != "true" && value != "false") BadState("bad override");
      st.override_applied = value == "true";
    } else if (key == "sentences") {
      in_sentences = true;
    } else if (key == "total_words") {
      st.total_words = ParseCount(value);
    } else if (key == "total_sentences") {
      st.total_sentences = ParseCount(value);
    } else {
      BadState("unknown key '" + std::string(key) + "'");
    }
  }
  if (seen != 7) BadState("missing fields");
  return st;
}

void WriteSummaryState(const Summary& summary, const std::filesystem::path& path) {
  WriteFile(path, RenderSummaryState(summary));
}

}  // namespace ats
