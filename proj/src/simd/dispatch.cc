// Copyright 2026 The Audlet Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <cstring>

#include "audlet/simd/kernels.h"

namespace audlet::simd {
namespace {

bool CpuHasAvx2() {
#if defined(AUDLET_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& Select() {
  const char* forced = std::getenv("AUDLET_SIMD");
  if (forced != nullptr && std::strcmp(forced, "scalar") == 0) {
    return internal::kScalarTable;
  }
  if (const KernelTable* avx2 = Avx2Kernels()) return *avx2;
  return internal::kScalarTable;
}

}  // namespace

const KernelTable& ScalarKernels() { return internal::kScalarTable; }

const KernelTable* Avx2Kernels() {
#if defined(AUDLET_HAVE_AVX2_KERNELS)
  static const bool supported = CpuHasAvx2();
  return supported ? &internal::kAvx2Table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& Kernels() {
  static const KernelTable& active = Select();
  return active;
}

}  // namespace audlet::simd
