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

// Finite-length signal primitives on C^L. Everything is circular: the DFT
// grid has L bins, convolution wraps around, and down/upsampling operate on
// the L-periodic lattice.
//
// DFT convention: X[j] = sum_n x[n] exp(-2 pi i j n / L), unnormalized
// forward, 1/L on the inverse.

#ifndef AUDLET_DSP_H_
#define AUDLET_DSP_H_

#include <cstddef>
#include <span>

#include "audlet/types.h"

namespace audlet {

ComplexVector Dft(std::span<const Complex> x);
ComplexVector Idft(std::span<const Complex> spectrum);

// In-place variants used on hot paths; `data` is overwritten.
void DftInPlace(std::span<Complex> data);
void IdftInPlace(std::span<Complex> data);

// y[n] = x[d n]; requires d >= 1 and d | L.
ComplexVector Downsample(std::span<const Complex> x, std::size_t factor);
// y[d n] = x[n], zeros elsewhere; result has length L d.
ComplexVector Upsample(std::span<const Complex> x, std::size_t factor);

// y[n] = sum_l x[l] h[(n - l) mod L], evaluated through the DFT.
ComplexVector CircularConvolve(std::span<const Complex> x,
                               std::span<const Complex> h);

// Throws Error(kDomain) if any sample is NaN or infinite, Error(kShape) if x
// is empty.
void CheckSignal(std::span<const Complex> x, const char* what);

}  // namespace audlet

#endif  // AUDLET_DSP_H_
