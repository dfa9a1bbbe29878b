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

#include "ats/kernels.h"

#include <cstdlib>
#include <stdexcept>

namespace ats::kernels {
namespace {

constexpr KernelTable kScalarTable{&scalar::AsciiPrefix, &scalar::GatherSum,
                                   &scalar::LcsLength};
#if defined(ATS_HAVE_AVX2)
constexpr KernelTable kAvx2Table{&avx2::AsciiPrefix, &avx2::GatherSum,
                                 &avx2::LcsLength};
#endif

Isa DetectIsa() {
  const char* force = std::getenv("ATS_FORCE_SCALAR");
  if (force != nullptr && *force != '\0' && *force != '0') return Isa::kScalar;
  return IsaAvailable(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
}

const KernelTable& Active() {
  static const KernelTable& table = Table(DetectIsa());
  return table;
}

}  // namespace

std::string_view IsaName(Isa isa) {
  return isa == Isa::kAvx2 ? "avx2" : "scalar";
}

bool IsaAvailable(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(ATS_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& Table(Isa isa) {
  if (!IsaAvailable(isa)) {
    throw std::invalid_argument("instruction set not available: " +
                                std::string(IsaName(isa)));
  }
#if defined(ATS_HAVE_AVX2)
  if (isa == Isa::kAvx2) return kAvx2Table;
#endif
  return kScalarTable;
}

Isa ActiveIsa() {
  static const Isa isa = DetectIsa();
  return isa;
}

std::size_t AsciiPrefixLength(std::string_view bytes) {
  return Active().ascii_prefix(
      reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size());
}

std::int64_t GatherSum(std::span<const std::int32_t> idx,
                       std::span<const std::int32_t> table) {
  return Active().gather_sum(idx.data(), idx.size(), table.data());
}

std::size_t LcsLength(std::span<const std::int32_t> a,
                      std::span<const std::int32_t> b) {
  return Active().lcs_length(a.data(), a.size(), b.data(), b.size());
}

}  // namespace ats::kernels
