// Copyright 2026 The vgrade Authors.
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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "fixtures.hpp"
#include "vgrade/simd.hpp"

using namespace vgrade;
namespace vt = vgrade::testing;

namespace {

std::vector<simd::Isa> available() {
  std::vector<simd::Isa> out;
  for (auto isa : {simd::Isa::kScalar, simd::Isa::kAvx2, simd::Isa::kNeon}) {
    if (simd::isa_supported(isa)) out.push_back(isa);
  }
  return out;
}

}  // namespace

TEST(Simd, ScalarAlwaysSupported) {
  EXPECT_TRUE(simd::isa_supported(simd::Isa::kScalar));
  EXPECT_EQ(simd::table_for(simd::Isa::kScalar).isa, simd::Isa::kScalar);
  EXPECT_FALSE(simd::isa_name(simd::active().isa).empty());
}

TEST(Simd, SumAbsDiffExactAcrossIsas) {
  vt::Rng rng(11);
  const auto ref = simd::scalar::table();
  for (std::size_t n : {0u, 1u, 7u, 31u, 32u, 33u, 64u, 1000u, 196608u}) {
    std::vector<std::uint8_t> a(n), b(n);
    for (auto& v : a) v = rng.byte();
    for (auto& v : b) v = rng.byte();
    std::uint64_t want = 0;
    for (std::size_t i = 0; i < n; ++i) want += static_cast<std::uint64_t>(std::abs(int(a[i]) - int(b[i])));
    for (auto isa : available()) {
      EXPECT_EQ(simd::table_for(isa).sum_abs_diff_u8(a.data(), b.data(), n), want) << simd::isa_name(isa);
    }
    EXPECT_EQ(ref.sum_abs_diff_u8(a.data(), b.data(), n), want);
  }
}

TEST(Simd, ExtremeBytes) {
  std::vector<std::uint8_t> a(1 << 16, 0), b(1 << 16, 255);
  for (auto isa : available()) {
    EXPECT_EQ(simd::table_for(isa).sum_abs_diff_u8(a.data(), b.data(), a.size()), 255ull << 16);
  }
}

TEST(Simd, FloatKernelsAgree) {
  vt::Rng rng(12);
  const auto ref = simd::scalar::table();
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 768u, 1025u}) {
    std::vector<double> a(n), b(n);
    for (auto& v : a) v = rng.uniform(-1, 1);
    for (auto& v : b) v = rng.uniform(-1, 1);
    const double dot = ref.dot_f64(a.data(), b.data(), n);
    const double sum = ref.sum_f64(a.data(), n);
    for (auto isa : available()) {
      const auto t = simd::table_for(isa);
      EXPECT_NEAR(t.dot_f64(a.data(), b.data(), n), dot, 1e-12);
      EXPECT_NEAR(t.sum_f64(a.data(), n), sum, 1e-12);
    }
  }
}
