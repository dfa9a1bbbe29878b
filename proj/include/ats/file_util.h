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

#ifndef ATS_FILE_UTIL_H_
#define ATS_FILE_UTIL_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace ats {

// Throws Error(kIoFailure) on failure.
std::string ReadFile(const std::filesystem::path& path);

// Creates parent directories as needed. Writes bytes verbatim (no newline
// translation).
void WriteFile(const std::filesystem::path& path, std::string_view contents);

std::string Sha256Hex(std::string_view data);

// Regular files under `root` (recursive), sorted by generic path string.
std::vector<std::filesystem::path> ListFilesRecursive(
    const std::filesystem::path& root);

}  // namespace ats

#endif  // ATS_FILE_UTIL_H_
