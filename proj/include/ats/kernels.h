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

#ifndef ATS_KERNELS_H_
#define ATS_KERNELS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Integer inner loops with a scalar reference and vectorized variants. The
// active instruction set is chosen once at first use: AVX2 when the CPU
// reports it, unless ATS_FORCE_SCALAR is set in the environment. All
// variants return bit-identical results.
namespace ats::kernels {

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
  // Length of the leading run of bytes < 0x80.
  std::size_t (*ascii_prefix)(const unsigned char* data, std::size_t n);
  // Sum of table[idx[k]] for k < n.
  std::int64_t (*gather_sum)(const std::int32_t* idx, std::size_t n,
                             const std::int32_t* table);
  // Longest common subsequence length of two id sequences.
  std::size_t (*lcs_length)(const std::int32_t* a, std::size_t na,
                            const std::int32_t* b, std::size_t nb);
};

std::string_view IsaName(Isa isa);
bool IsaAvailable(Isa isa);
// Throws std::invalid_argument if `isa` is not available on this machine.
const KernelTable& Table(Isa isa);
Isa ActiveIsa();

std::size_t AsciiPrefixLength(std::string_view bytes);
std::int64_t GatherSum(std::span<const std::int32_t> idx,
                       std::span<const std::int32_t> table);
std::size_t LcsLength(std::span<const std::int32_t> a,
                      std::span<const std::int32_t> b);

namespace scalar {
std::size_t AsciiPrefix(const unsigned char* data, std::size_t n);
std::int64_t GatherSum(const std::int32_t* idx, std::size_t n,
                       const std::int32_t* table);
std::size_t LcsLength(const std::int32_t* a, std::size_t na,
                      const std::int32_t* b, std::size_t nb);
}  // namespace scalar

#if defined(ATS_HAVE_AVX2)
namespace avx2 {
std::size_t AsciiPrefix(const unsigned char* data, std::size_t n);
std::int64_t GatherSum(const std::int32_t* idx, std::size_t n,
                       const std::int32_t* table);
std::size_t LcsLength(const std::int32_t* a, std::size_t na,
                      const std::int32_t* b, std::size_t nb);
}  // namespace avx2
#endif

}  // namespace ats::kernels

#endif  // ATS_KERNELS_H_
