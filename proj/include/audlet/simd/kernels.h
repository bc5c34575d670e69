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

// Complex-double inner loops of the spectral filter bank paths.
//
// Every kernel has a portable scalar reference and an AVX2/FMA variant. The
// variant is chosen once per process from the CPU feature bits; setting the
// environment variable AUDLET_SIMD=scalar forces the reference kernels.
// Pointers need no particular alignment; any length (including 0) is valid.

#ifndef AUDLET_SIMD_KERNELS_H_
#define AUDLET_SIMD_KERNELS_H_

#include <complex>
#include <cstddef>

namespace audlet::simd {

using Complex = std::complex<double>;

struct KernelTable {
  const char* name;
  // out[i] += a[i] * b[i]
  void (*mul_acc)(Complex* out, const Complex* a, const Complex* b,
                  std::size_t n);
  // out[i] += conj(a[i]) * b[i]
  void (*conj_mul_acc)(Complex* out, const Complex* a, const Complex* b,
                       std::size_t n);
  // out[i] += scale * |a[i]|^2
  void (*norm_acc)(double* out, const Complex* a, double scale, std::size_t n);
  // out[i] *= w[i]
  void (*mul_real)(Complex* out, const double* w, std::size_t n);
  // y[i] += alpha * x[i]
  void (*axpy)(Complex* y, Complex alpha, const Complex* x, std::size_t n);
  // sum_i a[i] * conj(b[i])
  Complex (*dot)(const Complex* a, const Complex* b, std::size_t n);
};

// The table selected for this process.
const KernelTable& Kernels();

const KernelTable& ScalarKernels();

// nullptr when the binary was built without AVX2 support or the CPU lacks
// AVX2/FMA.
const KernelTable* Avx2Kernels();

namespace internal {
extern const KernelTable kScalarTable;
#if defined(AUDLET_HAVE_AVX2_KERNELS)
extern const KernelTable kAvx2Table;
#endif
}  // namespace internal

}  // namespace audlet::simd

#endif  // AUDLET_SIMD_KERNELS_H_
