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

#ifndef AUDLET_TYPES_H_
#define AUDLET_TYPES_H_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace audlet {

using Complex = std::complex<double>;

// A finite signal on C^L, or a spectrum on the L-point DFT grid.
using ComplexVector = std::vector<Complex>;
using RealVector = std::vector<double>;

// Ragged subband coefficients: channel k holds L / d_k samples.
using SubbandCoefficients = std::vector<ComplexVector>;

// Optimal or estimated frame bounds, 0 <= lower <= upper.
struct BoundsEstimate {
  double lower = 0.0;
  double upper = 0.0;
};

// Euclidean norm and relative distance helpers shared by the solvers, the
// tests and the CLI.
double Norm(std::span<const Complex> x);
double RelativeError(std::span<const Complex> estimate,
                     std::span<const Complex> reference);

}  // namespace audlet

#endif  // AUDLET_TYPES_H_
