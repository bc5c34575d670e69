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

// Reconstruction from filter bank coefficients.
//
// Painless banks have a diagonal frame operator and a closed-form dual.
// Everything else goes through S x = D c, D the adjoint synthesis, solved
// with conjugate gradients or the Neumann frame algorithm. Both solvers
// run in the DFT domain, where S is the Walnut sum and the preconditioner
// is a pointwise division by H_0.

#ifndef AUDLET_SYNTHESIS_H_
#define AUDLET_SYNTHESIS_H_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "audlet/filterbank.h"
#include "audlet/types.h"

namespace audlet {

// G_k = conj(H_k) / H_0 on the support of H_k. Throws Error(kUnsupported)
// for a non-painless bank, Error(kNotAFrame) if H_0 vanishes anywhere.
FilterBank PainlessDual(const FilterBank& bank);

// H_k / sqrt(H_0): a Parseval bank with the same supports. Same
// preconditions as PainlessDual.
FilterBank NormalizeToParseval(const FilterBank& bank);

struct CgConfig {
  double tolerance = 1e-10;       // on ||r_k|| / ||r_0||
  std::size_t max_iterations = 0; // 0 selects L
  bool preconditioned = true;
  // Called with every iterate x_m (time domain), m >= 1.
  std::function<void(std::span<const Complex>)> observer;
};

struct IterativeResult {
  ComplexVector signal;
  std::size_t iterations = 0;
  // Relative residual ||D c - S x_m|| / ||D c|| after each iteration.
  std::vector<double> trace;
};

// Throws ConvergenceError (with the trace) when the tolerance is not met
// within max_iterations or the frame operator is singular.
IterativeResult CgSynthesize(const FilterBank& bank,
                             const SubbandCoefficients& coefficients,
                             const CgConfig& config = {});

struct NeumannConfig {
  double tolerance = 1e-12;  // on ||x_{m+1} - x_m|| / ||x_m||
  std::size_t max_iterations = 100000;
  // Called with every iterate x_m (time domain), m >= 1.
  std::function<void(std::span<const Complex>)> observer;
};

// Frame algorithm x_{m+1} = x_m + 2 / (A + B) (D c - S x_m) from x_0 = 0.
// Throws Error(kNotAFrame) if bounds.lower <= 0, ConvergenceError if the
// iteration budget runs out.
IterativeResult NeumannSynthesize(const FilterBank& bank,
                                  const SubbandCoefficients& coefficients,
                                  const BoundsEstimate& bounds,
                                  const NeumannConfig& config = {});

// One "iteration residual" pair per line.
std::string FormatTrace(const std::vector<double>& trace);

}  // namespace audlet

#endif  // AUDLET_SYNTHESIS_H_
