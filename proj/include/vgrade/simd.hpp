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

#pragma once

#include <cstdint>
#include <span>
#include <string_view>

// Data-parallel inner loops. Each kernel has a scalar reference version and
// ISA-specific variants; one table is picked at first use from the CPU
// features, overridable with VGRADE_SIMD=scalar|avx2|neon.

namespace vgrade::simd {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;
  // Sum of |a[i] - b[i]| over equal-length byte spans. Exact integer result.
  std::uint64_t (*sum_abs_diff_u8)(const std::uint8_t* a, const std::uint8_t* b,
                                   std::size_t n);
  double (*dot_f64)(const double* a, const double* b, std::size_t n);
  double (*sum_f64)(const double* a, std::size_t n);
};

namespace scalar {
KernelTable table();
}
#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
KernelTable table();
}
#endif
#if defined(__aarch64__)
namespace neon {
KernelTable table();
}
#endif

bool isa_supported(Isa isa);

// The process-wide table.
const KernelTable& active();

// Table for an explicit ISA; falls back to scalar if unsupported.
KernelTable table_for(Isa isa);

inline std::uint64_t sum_abs_diff(std::span<const std::uint8_t> a,
                                  std::span<const std::uint8_t> b) {
  return active().sum_abs_diff_u8(a.data(), b.data(), a.size());
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot_f64(a.data(), b.data(), a.size());
}

inline double sum(std::span<const double> a) {
  return active().sum_f64(a.data(), a.size());
}

}  // namespace vgrade::simd
