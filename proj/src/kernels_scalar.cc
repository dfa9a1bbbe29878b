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

#include <algorithm>
#include <vector>

#include "ats/kernels.h"

namespace ats::kernels::scalar {

std::size_t AsciiPrefix(const unsigned char* data, std::size_t n) {
  std::size_t i = 0;
  while (i < n && data[i] < 0x80) ++i;
  return i;
}

std::int64_t GatherSum(const std::int32_t* idx, std::size_t n,
                       const std::int32_t* table) {
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < n; ++k) sum += table[idx[k]];
  return sum;
}

// Row-by-row DP keeping one row.
std::size_t LcsLength(const std::int32_t* a, std::size_t na,
                      const std::int32_t* b, std::size_t nb) {
  if (na == 0 || nb == 0) return 0;
  std::vector<std::int32_t> row(nb + 1, 0);
  for (std::size_t i = 1; i <= na; ++i) {
    std::int32_t diag = 0;
    for (std::size_t j = 1; j <= nb; ++j) {
      const std::int32_t up = row[j];
      row[j] = a[i - 1] == b[j - 1] ? diag + 1 : std::max(up, row[j - 1]);
      diag = up;
    }
  }
  return static_cast<std::size_t>(row[nb]);
}

}  // namespace ats::kernels::scalar
