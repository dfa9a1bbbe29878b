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

#include "ats/normalizer.h"

#include <charconv>
#include <vector>

#include "ats/error.h"
#include "ats/file_util.h"
#include "ats/kernels.h"
#include "ats/utf8.h"

namespace ats {
namespace {

bool HasAsciiSource(const NormalizationConfig& cfg) {
  return !cfg.char_map.empty() && cfg.char_map.begin()->first < 0x80;
}

char32_t ParseHex(std::string_view tok, int line) {
  if (tok.starts_with("U+") || tok.starts_with("u+") || tok.starts_with("0x") ||
      tok.starts_with("0X")) {
    tok.remove_prefix(2);
  }
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v, 16);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() ||
      v > 0x10FFFF || (v >= 0xD800 && v <= 0xDFFF)) {
    throw Error(ErrorCode::kMalformedCharMap,
                "line " + std::to_string(line) + ": bad codepoint '" +
                    std::string(tok) + "'");
  }
  return static_cast<char32_t>(v);
}

char32_t DigitBase(NumeralFamily family) {
  switch (family) {
    case NumeralFamily::kAscii: return U'0';
    case NumeralFamily::kArabicIndic: return 0x0660;
    case NumeralFamily::kExtendedArabicIndic: return 0x06F0;
  }
  return U'0';
}

int DigitValue(char32_t cp) {
  if (cp >= U'0' && cp <= U'9') return static_cast<int>(cp - U'0');
  if (cp >= 0x0660 && cp <= 0x0669) return static_cast<int>(cp - 0x0660);
  if (cp >= 0x06F0 && cp <= 0x06F9) return static_cast<int>(cp - 0x06F0);
  return -1;
}

std::string Hex(char32_t cp) {
  char buf[16];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), static_cast<std::uint32_t>(cp), 16);
  return "U+" + std::string(buf, ptr);
}

}  // namespace

NormalizationConfig NormalizationConfig::Default() {
  NormalizationConfig cfg;
  cfg.char_map = {{0x064A, 0x06CC}, {0x0643, 0x06A9}};
  return cfg;
}

void NormalizationConfig::Validate() const {
  for (const auto& [src, dst] : char_map) {
    if (char_map.count(dst) && dst != src) {
      throw Error(ErrorCode::kMalformedCharMap,
                  "target " + Hex(dst) + " is also a source");
    }
    if (dst == src) {
      throw Error(ErrorCode::kMalformedCharMap, "identity mapping " + Hex(src));
    }
  }
}

std::map<char32_t, char32_t> ParseCharMap(std::string_view text) {
  std::map<char32_t, char32_t> map;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto fields = utf8::SplitWhitespace(line);
    if (fields.empty()) continue;
    if (fields.size() != 2) {
      throw Error(ErrorCode::kMalformedCharMap,
                  "line " + std::to_string(line_no) + ": expected two fields");
    }
    const char32_t src = ParseHex(fields[0], line_no);
    const char32_t dst = ParseHex(fields[1], line_no);
    auto [it, inserted] = map.emplace(src, dst);
    if (!inserted && it->second != dst) {
      throw Error(ErrorCode::kMalformedCharMap,
                  "line " + std::to_string(line_no) + ": source mapped twice");
    }
  }
  return map;
}

NormalizationConfig LoadNormalizationConfig(const std::filesystem::path& charmap) {
  NormalizationConfig cfg;
  cfg.char_map = ParseCharMap(ReadFile(charmap));
  cfg.Validate();
  return cfg;
}

std::string StandardizeCharacters(std::string_view raw,
                                  const NormalizationConfig& cfg) {
  std::string out;
  out.reserve(raw.size());
  const bool ascii_fast_path = !HasAsciiSource(cfg);
  std::size_t pos = 0;
  while (pos < raw.size()) {
    if (ascii_fast_path) {
      const std::size_t run = kernels::AsciiPrefixLength(raw.substr(pos));
      out.append(raw, pos, run);
      pos += run;
      if (pos >= raw.size()) break;
    }
    const utf8::Unit u = utf8::Decode(raw, pos);
    if (!u.valid) {
      out.append(raw, pos, u.length);
    } else if (u.cp == utf8::kTatweel && cfg.strip_tatweel) {
      // dropped
    } else if (u.cp == utf8::kZwnj && !cfg.preserve_zwnj) {
      // dropped
    } else if (auto it = cfg.char_map.find(u.cp); it != cfg.char_map.end()) {
      if (!(it->second == utf8::kTatweel && cfg.strip_tatweel) &&
          !(it->second == utf8::kZwnj && !cfg.preserve_zwnj)) {
        utf8::Append(out, it->second);
      }
    } else {
      out.append(raw, pos, u.length);
    }
    pos += u.length;
  }
  return out;
}

std::string UnifyNumerals(std::string_view raw, const NormalizationConfig& cfg) {
  const char32_t base = DigitBase(cfg.numeral_family);
  std::string out;
  out.reserve(raw.size());
  std::size_t pos = 0;
  while (pos < raw.size()) {
    if (cfg.numeral_family == NumeralFamily::kAscii) {
      const std::size_t run = kernels::AsciiPrefixLength(raw.substr(pos));
      out.append(raw, pos, run);
      pos += run;
      if (pos >= raw.size()) break;
    }
    const utf8::Unit u = utf8::Decode(raw, pos);
    const int digit = u.valid ? DigitValue(u.cp) : -1;
    if (digit >= 0) {
      utf8::Append(out, base + static_cast<char32_t>(digit));
    } else {
      out.append(raw, pos, u.length);
    }
    pos += u.length;
  }
  return out;
}

std::string CollapseSpaces(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool in_space = false;
  for (std::size_t pos = 0; pos < raw.size();) {
    const utf8::Unit u = utf8::Decode(raw, pos);
    const bool horizontal =
        u.valid && utf8::IsWhitespace(u.cp) && u.cp != '\n' && u.cp != '\r';
    if (horizontal) {
      if (!in_space) out.push_back(' ');
      in_space = true;
    } else {
      out.append(raw, pos, u.length);
      in_space = false;
    }
    pos += u.length;
  }
  return out;
}

std::string RepairLayout(std::string_view raw) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= raw.size(); ++i) {
    if (i == raw.size() || raw[i] == '\n' || raw[i] == '\r') {
      lines.push_back(utf8::Trim(raw.substr(start, i - start)));
      if (i + 1 < raw.size() && raw[i] == '\r' && raw[i + 1] == '\n') ++i;
      start = i + 1;
    }
  }

  // Breaks survive only after sentence-final punctuation; a blank run there
  // becomes one blank line.
  std::string out;
  out.reserve(raw.size());
  bool pending_paragraph = false;
  bool after_terminal = false;
  for (std::string_view line : lines) {
    if (line.empty()) {
      pending_paragraph = !out.empty();
      continue;
    }
    if (!out.empty()) {
      out += !after_terminal ? " " : pending_paragraph ? "\n\n" : "\n";
    }
    pending_paragraph = false;
    out += line;
    after_terminal = utf8::IsSentenceTerminal(utf8::ToCodepoints(line).back());
  }
  return out;
}

std::string Normalize(std::string_view raw, const NormalizationConfig& cfg,
                      bool keep_layout) {
  std::string text = UnifyNumerals(StandardizeCharacters(raw, cfg), cfg);
  if (cfg.collapse_whitespace) text = CollapseSpaces(text);
  if (!keep_layout) text = RepairLayout(text);
  return text;
}

}  // namespace ats
