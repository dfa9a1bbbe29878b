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

#include "synthetic.h"

#include <algorithm>

#include "ats/file_util.h"
#include "ats/summarizer.h"
#include "ats/utf8.h"

namespace ats::synthetic {

namespace {

// Content vocabulary, several words carrying the inflectional suffixes the
// stemmer strips. Two spellings use Arabic yeh/kaf so normalization matters.
const std::vector<std::string> kContent = {
    "ڕوسیا",      "ولاتێکی",    "کاریگەر",     "خاوەن",      "هێز",
    "توانایەکی",  "دۆزینەوەی",  "هاوکێشە",     "نێودەوڵەتی", "ڕۆڵی",
    "گەورە",      "بگێرێت",     "هەوڵ",        "بدرێت",      "سەرجەم",
    "پێکدادان",   "تێهەڵچوونەکان", "چوارچێوەی", "وڵاتانی",    "یەکیەتی",
    "سۆڤیەتدا",   "پێشوو",      "ئابووری",     "پەروەردە",   "مێژوو",
    "ناوچەکان",   "شارەکان",    "کتێبێک",      "نووسەران",   "بیرۆکەیەکی",
    "گرنگ",       "نوێ",        "کۆن",         "پرسیار",     "وەڵام",
    "ئەنجام",     "بەرنامەکان", "خوێندکاران",  "مامۆستا",    "زانکۆ",
    "هەرێمی",     "کوردستان",   "پەیوەندی",    "گۆڕانکاری",  "پێشکەوتن",
    "شیکردنەوە",  "داتاکان",    "ڕێگاکان",     "سەرچاوە",    "بنەما",
    "كتێب",       "ياسا",       "ڕۆژنامەکان",  "ژینگە",      "تەندروستی",
};

const std::vector<std::string> kStopwords = {
    "و", "وەک", "کە", "لە", "بە", "بۆ", "ئەم", "ئەو", "لەگەڵ", "هەروەها", "یان", "زۆر",
};

const std::vector<std::string> kNames = {"ئەحمەد", "کەریم", "شیلان", "ئاراس", "هێمن", "نەسرین"};

const std::vector<std::string> kNumbers = {"٢٠٢٣", "١٩٩١", "۲۰۱۵", "45", "١٢"};

}  // namespace

const std::vector<std::string> kDepartments = {
    "kurdish_language", "political_sciences", "social_sciences", "sociology"};

std::string Generator::Word() {
  const std::size_t r = Uniform(100);
  if (r < 35) return kStopwords[Uniform(kStopwords.size())];
  if (r < 38) return kNumbers[Uniform(kNumbers.size())];
  return kContent[Uniform(kContent.size())];
}

std::string Generator::Sentence(std::size_t words, bool allow_abbrev) {
  words = std::max<std::size_t>(words, 3);
  const bool abbrev = allow_abbrev && Uniform(6) == 0;
  const std::size_t abbrev_at = abbrev ? 1 + Uniform(words - 2) : words;
  std::string out;
  for (std::size_t i = 0; i < words; ++i) {
    if (!out.empty()) out += ' ';
    if (i == abbrev_at) {
      out += std::string(kAbbreviation) + ". " + kNames[Uniform(kNames.size())];
      continue;
    }
    out += Word();
    if (i + 1 < words && Uniform(12) == 0) out += "،";
  }
  out += Uniform(10) == 0 ? "؟" : ".";
  return out;
}

std::string Generator::Text(std::size_t words, bool allow_abbrev) {
  std::string out;
  std::size_t written = 0;
  std::size_t in_paragraph = 0;
  while (written < words) {
    const std::size_t n = std::min<std::size_t>(8 + Uniform(16), std::max<std::size_t>(words - written, 3));
    if (!out.empty()) out += in_paragraph == 5 ? "\n\n" : " ";
    if (in_paragraph == 5) in_paragraph = 0;
    const std::string s = Sentence(n, allow_abbrev);
    written += WordCount(s);
    out += s;
    ++in_paragraph;
  }
  return out;
}

std::vector<CorpusDocument> MakeCorpus(const CorpusOptions& options) {
  Generator gen(options.seed);
  std::vector<CorpusDocument> docs;
  for (const std::string& dept : kDepartments) {
    for (std::size_t i = 0; i < options.docs_per_department; ++i) {
      CorpusDocument doc;
      doc.department = dept;
      char id[64];
      std::snprintf(id, sizeof(id), "%s_%03zu", dept.c_str(), i + 1);
      doc.doc_id = id;
      const std::size_t main_words = options.body_words > options.conclusion_words
                                         ? options.body_words - options.conclusion_words
                                         : 1;
      doc.body = gen.Text(main_words);
      const std::string conclusion = gen.Text(options.conclusion_words);
      const std::size_t start = utf8::Length(doc.body) + 2;
      doc.body += "\n\n" + conclusion;
      doc.conclusion = ConclusionSpan{start, utf8::Length(doc.body)};
      doc.abstract = gen.Text(options.abstract_words, false);
      docs.push_back(std::move(doc));
    }
  }
  std::sort(docs.begin(), docs.end(), [](const CorpusDocument& a, const CorpusDocument& b) {
    return std::tie(a.department, a.doc_id) < std::tie(b.department, b.doc_id);
  });
  return docs;
}

void WriteCorpus(const std::vector<CorpusDocument>& docs, const std::filesystem::path& root) {
  for (const CorpusDocument& doc : docs) {
    const auto dir = root / doc.department / doc.doc_id;
    WriteFile(dir / "body.txt", doc.body + "\n");
    WriteFile(dir / "abstract.txt", doc.abstract + "\n");
    if (doc.conclusion) WriteFile(dir / "conclusion.meta", RenderConclusionMeta(*doc.conclusion));
  }
}

}  // namespace ats::synthetic
