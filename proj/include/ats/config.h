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

#ifndef ATS_CONFIG_H_
#define ATS_CONFIG_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace ats {

// Reader for the subset of TOML used by experiment configs: `[table]`
// headers, `key = value` pairs with basic strings, integers, floats and
// booleans, and `#` comments. Keys are flattened to "table.key".
class ConfigFile {
 public:
  using Value = std::variant<std::string, std::int64_t, double, bool>;

  static ConfigFile Parse(std::string_view text);

  bool Has(const std::string& key) const { return values_.count(key) > 0; }

  std::optional<std::string> GetString(const std::string& key) const;
  std::optional<std::int64_t> GetInt(const std::string& key) const;
  // Integers are accepted where a float is expected.
  std::optional<double> GetDouble(const std::string& key) const;
  std::optional<bool> GetBool(const std::string& key) const;

  const std::map<std::string, Value>& values() const { return values_; }

 private:
  std::map<std::string, Value> values_;
};

}  // namespace ats

#endif  // ATS_CONFIG_H_
