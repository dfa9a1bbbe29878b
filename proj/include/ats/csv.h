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

#ifndef ATS_CSV_H_
#define ATS_CSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace ats::csv {

// RFC 4180 quoting: fields containing a comma, quote, CR or LF are quoted and
// embedded quotes doubled. Rows end with LF.
std::string EscapeField(std::string_view field);
std::string FormatRow(const std::vector<std::string>& fields);

// Inverse of FormatRow over a whole document.
std::vector<std::vector<std::string>> Parse(std::string_view text);

}  // namespace ats::csv

#endif  // ATS_CSV_H_
