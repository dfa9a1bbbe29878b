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

#include "ats/utf8.h"

#include "ats/error.h"

namespace ats {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIoFailure: return "IoFailure";
    case ErrorCode::kMalformedCharMap: return "MalformedCharMap";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kMalformedModel: return "MalformedModel";
    case ErrorCode::kUnknownDepartment: return "UnknownDepartment";
    case ErrorCode::kEmptyDocument: return "EmptyDocument";
    case ErrorCode::kInvalidLimit: return "InvalidLimit";
    case ErrorCode::kMissingReference: return "MissingReference";
    case ErrorCode::kMissingBody: return "MissingBody";
    case ErrorCode::kMissingAbstract: return "MissingAbstract";
    case ErrorCode::kMalformedMeta: return "MalformedMeta";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kTooFewDocuments: return "TooFewDocuments";
    case ErrorCode::kMalformedConfig: return "MalformedConfig";
    case ErrorCode::kMalformedStopwords: return "MalformedStopwords";
    case ErrorCode::kMalformedState: return "MalformedState";
  }
  return "Unknown";
}

namespace utf8 {

Unit Decode(std::string_view s, std::size_t pos) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) return {b0, 1, true};
  std::size_t need = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    need = 1;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    need = 2;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    need = 3;
    cp = b0 & 0x07;
  } else {
    return {b0, 1, false};
  }
  if (pos + need >= s.size()) return {b0, 1, false};
  for (std::size_t i = 1; i <= need; ++i) {
    const auto b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80) return {b0, 1, false};
    cp = (cp << 6) | (b & 0x3F);
  }
  // Reject overlong forms and surrogates so encode(decode(x)) == x.
  static constexpr char32_t kMin[] = {0, 0x80, 0x800, 0x10000};
  if (cp < kMin[need] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    return {b0, 1, false};
  }
  return {cp, need + 1, true};
}

void Append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string Encode(char32_t cp) {
  std::string out;
  Append(out, cp);
  return out;
}

std::size_t Length(std::string_view s) {
  std::size_t n = 0;
  for (std::size_t pos = 0; pos < s.size(); pos += Decode(s, pos).length) ++n;
  return n;
}

std::vector<char32_t> ToCodepoints(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  for (std::size_t pos = 0; pos < s.size();) {
    const Unit u = Decode(s, pos);
    out.push_back(u.cp);
    pos += u.length;
  }
  return out;
}

std::string FromCodepoints(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) Append(out, cp);
  return out;
}

bool IsWhitespace(char32_t cp) {
  switch (cp) {
    case ' ': case '\t': case '\n': case '\r': case '\v': case '\f':
    case 0x00A0: case 0x1680: case 0x2028: case 0x2029: case 0x202F:
    case 0x205F: case 0x3000: case 0xFEFF:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool IsSentenceTerminal(char32_t cp) {
  return cp == '.' || cp == '!' || cp == '?' || cp == kArabicQuestionMark;
}

bool IsPunctuation(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
           (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
  }
  switch (cp) {
    case 0x00AB: case 0x00BB:  // guillemets
    case 0x060C: case 0x061B: case 0x061F:  // Arabic comma, semicolon, qmark
    case 0x066A: case 0x066B: case 0x066C: case 0x066D:
    case 0x06D4:  // Arabic full stop
      return true;
    default:
      break;
  }
  return (cp >= 0x2010 && cp <= 0x2027) || (cp >= 0x2030 && cp <= 0x205E);
}

bool IsDigit(char32_t cp) {
  return (cp >= '0' && cp <= '9') || (cp >= 0x0660 && cp <= 0x0669) ||
         (cp >= 0x06F0 && cp <= 0x06F9);
}

std::string AsciiLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<std::string_view> SplitWhitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  std::size_t start = std::string_view::npos;
  while (pos < s.size()) {
    const Unit u = Decode(s, pos);
    if (IsWhitespace(u.cp) && u.valid) {
      if (start != std::string_view::npos) {
        out.push_back(s.substr(start, pos - start));
        start = std::string_view::npos;
      }
    } else if (start == std::string_view::npos) {
      start = pos;
    }
    pos += u.length;
  }
  if (start != std::string_view::npos) out.push_back(s.substr(start));
  return out;
}

std::string_view Trim(std::string_view s) {
  std::size_t begin = 0;
  while (begin < s.size()) {
    const Unit u = Decode(s, begin);
    if (!u.valid || !IsWhitespace(u.cp)) break;
    begin += u.length;
  }
  std::size_t end = begin;
  std::size_t last_content_end = begin;
  while (end < s.size()) {
    const Unit u = Decode(s, end);
    end += u.length;
    if (!u.valid || !IsWhitespace(u.cp)) last_content_end = end;
  }
  return s.substr(begin, last_content_end - begin);
}

}  // namespace utf8
}  // namespace ats
