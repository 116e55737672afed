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

#include <cstdlib>
#include <string>

#include "vgrade/simd.hpp"

namespace vgrade::simd {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "scalar";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

KernelTable table_for(Isa isa) {
  if (!isa_supported(isa)) return scalar::table();
  switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::kAvx2: return avx2::table();
#endif
#if defined(__aarch64__)
    case Isa::kNeon: return neon::table();
#endif
    default: return scalar::table();
  }
}

namespace {

KernelTable select() {
  if (const char* forced = std::getenv("VGRADE_SIMD")) {
    const std::string name(forced);
    if (name == "scalar") return scalar::table();
    if (name == "avx2") return table_for(Isa::kAvx2);
    if (name == "neon") return table_for(Isa::kNeon);
  }
  if (isa_supported(Isa::kAvx2)) return table_for(Isa::kAvx2);
  if (isa_supported(Isa::kNeon)) return table_for(Isa::kNeon);
  return scalar::table();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable table = select();
  return table;
}

}  // namespace vgrade::simd
