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

// AVX2/FMA kernels. This translation unit is compiled with -mavx2 -mfma and
// must only be entered after the dispatcher has checked the CPU flags.
//
// A __m256d holds two interleaved complex doubles [re0 im0 re1 im1].

#include <immintrin.h>

#include "audlet/simd/kernels.h"

namespace audlet::simd {
namespace {

inline __m256d Load(const Complex* p) {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}

inline void Store(Complex* p, __m256d v) {
  _mm256_storeu_pd(reinterpret_cast<double*>(p), v);
}

// a * b
inline __m256d CMul(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);
  const __m256d b_im = _mm256_permute_pd(b, 0xF);
  const __m256d a_swap = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_swap, b_im));
}

// conj(a) * b
inline __m256d CConjMul(__m256d a, __m256d b) {
  const __m256d a_re = _mm256_movedup_pd(a);
  const __m256d a_im = _mm256_permute_pd(a, 0xF);
  const __m256d b_swap = _mm256_permute_pd(b, 0x5);
  return _mm256_fmsubadd_pd(b, a_re, _mm256_mul_pd(b_swap, a_im));
}

void MulAcc(Complex* out, const Complex* a, const Complex* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    Store(out + i, _mm256_add_pd(Load(out + i), CMul(Load(a + i), Load(b + i))));
  }
  for (; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    out[i] = Complex(out[i].real() + (ar * br - ai * bi),
                     out[i].imag() + (ar * bi + ai * br));
  }
}

void ConjMulAcc(Complex* out, const Complex* a, const Complex* b,
                std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    Store(out + i,
          _mm256_add_pd(Load(out + i), CConjMul(Load(a + i), Load(b + i))));
  }
  for (; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    out[i] = Complex(out[i].real() + (ar * br + ai * bi),
                     out[i].imag() + (ar * bi - ai * br));
  }
}

void NormAcc(double* out, const Complex* a, double scale, std::size_t n) {
  const __m256d s = _mm256_set1_pd(scale);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v0 = Load(a + i);
    const __m256d v1 = Load(a + i + 2);
    // [|a0|^2, |a2|^2, |a1|^2, |a3|^2] -> natural order
    __m256d norms = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
    norms = _mm256_permute4x64_pd(norms, 0xD8);
    _mm256_storeu_pd(out + i, _mm256_fmadd_pd(s, norms, _mm256_loadu_pd(out + i)));
  }
  for (; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    out[i] += scale * (ar * ar + ai * ai);
  }
}

void MulReal(Complex* out, const double* w, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d wv = _mm256_loadu_pd(w + i);
    const __m256d w01 = _mm256_permute4x64_pd(wv, 0x50);
    const __m256d w23 = _mm256_permute4x64_pd(wv, 0xFA);
    Store(out + i, _mm256_mul_pd(Load(out + i), w01));
    Store(out + i + 2, _mm256_mul_pd(Load(out + i + 2), w23));
  }
  for (; i < n; ++i) {
    out[i] = Complex(out[i].real() * w[i], out[i].imag() * w[i]);
  }
}

void Axpy(Complex* y, Complex alpha, const Complex* x, std::size_t n) {
  const __m256d c = _mm256_setr_pd(alpha.real(), alpha.imag(), alpha.real(),
                                   alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    Store(y + i, _mm256_add_pd(Load(y + i), CMul(c, Load(x + i))));
  }
  const double cr = alpha.real(), ci = alpha.imag();
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] = Complex(y[i].real() + (cr * xr - ci * xi),
                   y[i].imag() + (cr * xi + ci * xr));
  }
}

Complex Dot(const Complex* a, const Complex* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    // a * conj(b) = conj(conj(a) * b)
    acc = _mm256_add_pd(acc, CConjMul(Load(a + i), Load(b + i)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double re = lanes[0] + lanes[2];
  double im = -(lanes[1] + lanes[3]);
  for (; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br + ai * bi;
    im += ai * br - ar * bi;
  }
  return {re, im};
}

}  // namespace

namespace internal {
const KernelTable kAvx2Table = {
    "avx2", &MulAcc, &ConjMulAcc, &NormAcc, &MulReal, &Axpy, &Dot,
};
}  // namespace internal

}  // namespace audlet::simd
