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

// Reference kernels. Written on explicit real/imaginary parts so that no
// std::complex NaN/Inf recovery path is involved and the arithmetic matches
// the vector variants operation for operation (modulo FMA contraction).

#include "audlet/simd/kernels.h"

namespace audlet::simd {
namespace {

void MulAcc(Complex* out, const Complex* a, const Complex* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    out[i] = Complex(out[i].real() + (ar * br - ai * bi),
                     out[i].imag() + (ar * bi + ai * br));
  }
}

void ConjMulAcc(Complex* out, const Complex* a, const Complex* b,
                std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    out[i] = Complex(out[i].real() + (ar * br + ai * bi),
                     out[i].imag() + (ar * bi - ai * br));
  }
}

void NormAcc(double* out, const Complex* a, double scale, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    out[i] += scale * (ar * ar + ai * ai);
  }
}

void MulReal(Complex* out, const double* w, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = Complex(out[i].real() * w[i], out[i].imag() * w[i]);
  }
}

void Axpy(Complex* y, Complex alpha, const Complex* x, std::size_t n) {
  const double cr = alpha.real(), ci = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] = Complex(y[i].real() + (cr * xr - ci * xi),
                   y[i].imag() + (cr * xi + ci * xr));
  }
}

Complex Dot(const Complex* a, const Complex* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br + ai * bi;
    im += ai * br - ar * bi;
  }
  return {re, im};
}

}  // namespace

namespace internal {
const KernelTable kScalarTable = {
    "scalar", &MulAcc, &ConjMulAcc, &NormAcc, &MulReal, &Axpy, &Dot,
};
}  // namespace internal

}  // namespace audlet::simd
