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

#include <random>
#include <string>
#include <vector>

#include "ats/kernels.h"
#include "gtest/gtest.h"

namespace ats::kernels {
namespace {

std::size_t LcsOracle(const std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b) {
  std::vector<std::vector<std::size_t>> dp(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      dp[i][j] = a[i - 1] == b[j - 1] ? dp[i - 1][j - 1] + 1 : std::max(dp[i - 1][j], dp[i][j - 1]);
    }
  }
  return dp[a.size()][b.size()];
}

std::vector<Isa> Available() {
  std::vector<Isa> out = {Isa::kScalar};
  if (IsaAvailable(Isa::kAvx2)) out.push_back(Isa::kAvx2);
  return out;
}

TEST(Kernels, ScalarAlwaysAvailable) {
  EXPECT_TRUE(IsaAvailable(Isa::kScalar));
  EXPECT_EQ(IsaName(Isa::kScalar), "scalar");
  EXPECT_NO_THROW(Table(ActiveIsa()));
}

TEST(Kernels, AsciiPrefixMatchesAcrossIsas) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = rng() % 200;
    std::string s(n, 'a');
    for (auto& c : s) c = static_cast<char>(rng() % 0x7F);
    if (n > 0 && rng() % 2) s[rng() % n] = static_cast<char>(0x80 | (rng() % 0x40));
    std::size_t expect = 0;
    while (expect < n && static_cast<unsigned char>(s[expect]) < 0x80) ++expect;
    for (Isa isa : Available()) {
      const auto* p = reinterpret_cast<const unsigned char*>(s.data());
      ASSERT_EQ(Table(isa).ascii_prefix(p, n), expect) << IsaName(isa);
    }
  }
}

TEST(Kernels, GatherSumMatchesAcrossIsas) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 2000; ++t) {
    std::vector<std::int32_t> table(1 + rng() % 64);
    for (auto& v : table) v = static_cast<std::int32_t>(rng() % 2000000000);
    std::vector<std::int32_t> idx(rng() % 100);
    for (auto& i : idx) i = static_cast<std::int32_t>(rng() % table.size());
    std::int64_t expect = 0;
    for (auto i : idx) expect += table[i];
    for (Isa isa : Available()) {
      ASSERT_EQ(Table(isa).gather_sum(idx.data(), idx.size(), table.data()), expect)
          << IsaName(isa);
    }
  }
}

TEST(Kernels, LcsMatchesDpOracleAcrossIsas) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 3000; ++t) {
    const int alphabet = 1 + static_cast<int>(rng() % 10);
    std::vector<std::int32_t> a(rng() % 40), b(rng() % 40);
    for (auto& v : a) v = static_cast<std::int32_t>(rng() % alphabet);
    for (auto& v : b) v = static_cast<std::int32_t>(rng() % alphabet);
    const std::size_t expect = LcsOracle(a, b);
    for (Isa isa : Available()) {
      ASSERT_EQ(Table(isa).lcs_length(a.data(), a.size(), b.data(), b.size()), expect)
          << IsaName(isa);
    }
  }
  // Long inputs cross several vector widths.
  std::vector<std::int32_t> a(777), b(1031);
  for (auto& v : a) v = static_cast<std::int32_t>(rng() % 7);
  for (auto& v : b) v = static_cast<std::int32_t>(rng() % 7);
  const std::size_t expect = LcsOracle(a, b);
  for (Isa isa : Available()) {
    EXPECT_EQ(Table(isa).lcs_length(a.data(), a.size(), b.data(), b.size()), expect);
  }
}

}  // namespace
}  // namespace ats::kernels
