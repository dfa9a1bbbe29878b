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

#ifndef ATS_UTF8_H_
#define ATS_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ats::utf8 {

// One decoded unit. Invalid bytes decode as a single-byte unit with
// `valid == false`; encoders copy those bytes through untouched.
struct Unit {
  char32_t cp = 0;
  std::size_t length = 0;
  bool valid = true;
};

Unit Decode(std::string_view s, std::size_t pos);
void Append(std::string& out, char32_t cp);
std::string Encode(char32_t cp);

// Number of decoded units (codepoints, counting each invalid byte as one).
std::size_t Length(std::string_view s);

std::vector<char32_t> ToCodepoints(std::string_view s);
std::string FromCodepoints(const std::vector<char32_t>& cps);

bool IsWhitespace(char32_t cp);
// Sentence-final marks: . ! ? and the Arabic question mark.
bool IsSentenceTerminal(char32_t cp);
bool IsPunctuation(char32_t cp);
bool IsDigit(char32_t cp);

inline constexpr char32_t kZwnj = 0x200C;
inline constexpr char32_t kTatweel = 0x0640;
inline constexpr char32_t kArabicComma = 0x060C;
inline constexpr char32_t kArabicQuestionMark = 0x061F;

// Lower-cases ASCII letters only; Arabic script is caseless.
std::string AsciiLower(std::string_view s);

// Splits on runs of whitespace (Unicode-aware per IsWhitespace).
std::vector<std::string_view> SplitWhitespace(std::string_view s);

std::string_view Trim(std::string_view s);

}  // namespace ats::utf8

#endif  // ATS_UTF8_H_
