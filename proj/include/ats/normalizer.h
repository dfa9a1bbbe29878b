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

#ifndef ATS_NORMALIZER_H_
#define ATS_NORMALIZER_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace ats {

enum class NumeralFamily { kAscii, kArabicIndic, kExtendedArabicIndic };

struct NormalizationConfig {
  // Source codepoint -> canonical codepoint. Validate() rejects maps whose
  // targets are also sources, so one application is a fixed point.
  std::map<char32_t, char32_t> char_map;
  NumeralFamily numeral_family = NumeralFamily::kAscii;
  bool strip_tatweel = true;
  bool collapse_whitespace = true;
  bool preserve_zwnj = true;

  // Arabic yeh -> Farsi yeh, Arabic kaf -> keheh; tatweel stripped.
  static NormalizationConfig Default();

  // Throws Error(kMalformedCharMap).
  void Validate() const;
};

// Char map file: one "SOURCE_HEX TARGET_HEX" pair per line, '#' comments.
// Hex may carry a "U+" or "0x" prefix. Throws Error(kMalformedCharMap).
std::map<char32_t, char32_t> ParseCharMap(std::string_view text);
NormalizationConfig LoadNormalizationConfig(const std::filesystem::path& charmap);

std::string StandardizeCharacters(std::string_view raw,
                                  const NormalizationConfig& cfg);
// Maps Arabic-Indic and Extended Arabic-Indic digits (and ASCII digits, when
// the target family is not ASCII) digit by digit.
std::string UnifyNumerals(std::string_view raw, const NormalizationConfig& cfg);

// Trims every line and joins any line break (blank lines included) that is
// not preceded by sentence-final punctuation with a space. After a terminal,
// blank-line runs collapse to one blank line.
// Output has no leading or trailing line breaks.
std::string RepairLayout(std::string_view raw);

// Runs of horizontal whitespace become one ASCII space. Line breaks kept.
std::string CollapseSpaces(std::string_view raw);

// Full chain: standardize, unify numerals, collapse spaces (per cfg), then
// repair layout unless `keep_layout`.
std::string Normalize(std::string_view raw, const NormalizationConfig& cfg,
                      bool keep_layout = false);

}  // namespace ats

#endif  // ATS_NORMALIZER_H_
