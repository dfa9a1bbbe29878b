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

#include <immintrin.h>

#include <algorithm>
#include <array>
#include <vector>

#include "ats/kernels.h"

namespace ats::kernels::avx2 {

std::size_t AsciiPrefix(const unsigned char* data, std::size_t n) {
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i v =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
    const auto mask = static_cast<unsigned>(_mm256_movemask_epi8(v));
    if (mask != 0) return i + static_cast<std::size_t>(__builtin_ctz(mask));
  }
  while (i < n && data[i] < 0x80) ++i;
  return i;
}

std::int64_t GatherSum(const std::int32_t* idx, std::size_t n,
                       const std::int32_t* table) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    const __m256i vi =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(idx + k));
    const __m256i vals = _mm256_i32gather_epi32(table, vi, 4);
    acc = _mm256_add_epi64(acc,
                           _mm256_cvtepi32_epi64(_mm256_castsi256_si128(vals)));
    acc = _mm256_add_epi64(
        acc, _mm256_cvtepi32_epi64(_mm256_extracti128_si256(vals, 1)));
  }
  alignas(32) std::array<std::int64_t, 4> lanes;
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes.data()), acc);
  std::int64_t sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; k < n; ++k) sum += table[idx[k]];
  return sum;
}

// Anti-diagonal DP. Cell (i, j) lives on diagonal d = i + j at index i, so
// every cell of one diagonal depends only on the two previous diagonals and
// eight consecutive i can be computed at once. b is reversed so that
// b[d - i - 1] is contiguous in i.
std::size_t LcsLength(const std::int32_t* a, std::size_t na,
                      const std::int32_t* b, std::size_t nb) {
  if (na == 0 || nb == 0) return 0;
  const auto m = static_cast<std::ptrdiff_t>(na);
  const auto n = static_cast<std::ptrdiff_t>(nb);
  std::vector<std::int32_t> rb(b, b + nb);
  std::reverse(rb.begin(), rb.end());
  std::array<std::vector<std::int32_t>, 3> diag;
  for (auto& d : diag) d.assign(na + 1, 0);
  const __m256i one = _mm256_set1_epi32(1);
  for (std::ptrdiff_t d = 2; d <= m + n; ++d) {
    std::int32_t* cur = diag[d % 3].data();
    const std::int32_t* prev1 = diag[(d - 1) % 3].data();
    const std::int32_t* prev2 = diag[(d - 2) % 3].data();
    const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(1, d - n);
    const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(m, d - 1);
    const std::ptrdiff_t shift = n - d;  // rb[shift + i] == b[d - i - 1]
    std::ptrdiff_t i = lo;
    for (; i + 8 <= hi + 1; i += 8) {
      const __m256i va =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i - 1));
      const __m256i vb =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rb.data() + shift + i));
      const __m256i up =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prev1 + i - 1));
      const __m256i left =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prev1 + i));
      const __m256i dg =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prev2 + i - 1));
      const __m256i eq = _mm256_cmpeq_epi32(va, vb);
      const __m256i best = _mm256_max_epi32(up, left);
      const __m256i v = _mm256_blendv_epi8(best, _mm256_add_epi32(dg, one), eq);
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(cur + i), v);
    }
    for (; i <= hi; ++i) {
      cur[i] = a[i - 1] == rb[shift + i] ? prev2[i - 1] + 1
                                 : std::max(prev1[i - 1], prev1[i]);
    }
  }
  return static_cast<std::size_t>(diag[(m + n) % 3][na]);
}

}  // namespace ats::kernels::avx2
