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

#include "ats/config.h"

#include <charconv>
#include <cstdlib>

#include "ats/error.h"

namespace ats {
namespace {

std::string_view TrimAscii(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void Fail(int line, const std::string& msg) {
  throw Error(ErrorCode::kMalformedConfig,
              "line " + std::to_string(line) + ": " + msg);
}

// Parses a basic string starting at s[0] == '"'; returns the rest of the line.
std::string_view ParseString(std::string_view s, std::string& out, int line) {
  std::size_t i = 1;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '"') return s.substr(i + 1);
    if (c != '\\') {
      out.push_back(c);
      continue;
    }
    if (++i >= s.size()) break;
    switch (s[i]) {
      case 'n': out.push_back('\n'); break;
      case 't': out.push_back('\t'); break;
      case '"': out.push_back('"'); break;
      case '\\': out.push_back('\\'); break;
      default: Fail(line, "unsupported escape");
    }
  }
  Fail(line, "unterminated string");
}

ConfigFile::Value ParseValue(std::string_view raw, int line) {
  if (raw.empty()) Fail(line, "missing value");
  if (raw.front() == '"') {
    std::string s;
    std::string_view rest = TrimAscii(ParseString(raw, s, line));
    if (!rest.empty() && rest.front() != '#') Fail(line, "trailing characters");
    return s;
  }
  if (auto hash = raw.find('#'); hash != std::string_view::npos) {
    raw = TrimAscii(raw.substr(0, hash));
  }
  if (raw == "true") return true;
  if (raw == "false") return false;
  std::string digits;
  for (char c : raw) {
    if (c != '_') digits.push_back(c);
  }
  const bool is_float = digits.find_first_of(".eE") != std::string::npos;
  if (!is_float) {
    std::int64_t v = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      Fail(line, "bad integer '" + std::string(raw) + "'");
    }
    return v;
  }
  char* end = nullptr;
  const double v = std::strtod(digits.c_str(), &end);
  if (end != digits.c_str() + digits.size()) {
    Fail(line, "bad float '" + std::string(raw) + "'");
  }
  return v;
}

}  // namespace

ConfigFile ConfigFile::Parse(std::string_view text) {
  ConfigFile cfg;
  std::string table;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = TrimAscii(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      const std::size_t close = line.find(']');
      if (close == std::string_view::npos) Fail(line_no, "unclosed table header");
      table = std::string(TrimAscii(line.substr(1, close - 1)));
      if (table.empty()) Fail(line_no, "empty table name");
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) Fail(line_no, "expected key = value");
    std::string key(TrimAscii(line.substr(0, eq)));
    if (key.empty()) Fail(line_no, "empty key");
    if (!table.empty()) key = table + "." + key;
    if (cfg.values_.count(key)) Fail(line_no, "duplicate key " + key);
    cfg.values_[key] = ParseValue(TrimAscii(line.substr(eq + 1)), line_no);
  }
  return cfg;
}

std::optional<std::string> ConfigFile::GetString(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  if (auto* s = std::get_if<std::string>(&it->second)) return *s;
  throw Error(ErrorCode::kMalformedConfig, key + " must be a string");
}

std::optional<std::int64_t> ConfigFile::GetInt(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  if (auto* v = std::get_if<std::int64_t>(&it->second)) return *v;
  throw Error(ErrorCode::kMalformedConfig, key + " must be an integer");
}

std::optional<double> ConfigFile::GetDouble(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  if (auto* v = std::get_if<double>(&it->second)) return *v;
  if (auto* v = std::get_if<std::int64_t>(&it->second)) {
    return static_cast<double>(*v);
  }
  throw Error(ErrorCode::kMalformedConfig, key + " must be a number");
}

std::optional<bool> ConfigFile::GetBool(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  if (auto* v = std::get_if<bool>(&it->second)) return *v;
  throw Error(ErrorCode::kMalformedConfig, key + " must be a boolean");
}

}  // namespace ats
