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

// Frame-theoretic diagnostics of a filter bank.
//
// In the Fourier domain the frame operator of a bank acts as
//   (S x)^[j] = sum_{n=0}^{D-1} H_n[j] X[j - n L / D],   D = lcm(d_k),
//   H_n[j]    = sum_{k : q_k | n} conj(H_k[j]) H_k[j - n L / D] / d_k,
// with q_k = D / d_k. H_0 is the frequency response, H_n (n >= 1) are the
// alias components. Banks with conjugate pairs are analysed through their
// expanded (mirror-closed) form throughout.

#ifndef AUDLET_FRAME_DIAGNOSTICS_H_
#define AUDLET_FRAME_DIAGNOSTICS_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "audlet/filterbank.h"
#include "audlet/finite_frames.h"
#include "audlet/types.h"

namespace audlet {

enum class BoundsMethod { kPainlessExact, kDiagonalDominance, kDenseEigen };

std::string_view BoundsMethodName(BoundsMethod method);
BoundsMethod ParseBoundsMethod(std::string_view name);

struct FrameReport {
  RealVector frequency_response;  // H_0 per bin
  RealVector alias_norms;         // sum_{n>=1} |H_n| per bin
  bool painless = false;
  BoundsEstimate bounds;
  BoundsMethod method = BoundsMethod::kPainlessExact;

  bool is_frame() const { return bounds.lower > 0.0; }
  // B / A, infinite when A == 0.
  double condition_number() const;
};

struct PRResidual {
  std::size_t delay = 0;
  double max_deviation = 0.0;
};

// The frame operator in its Walnut form, with the expanded bank and H_0
// precomputed so it can be applied repeatedly.
class SpectralFrameOperator {
 public:
  explicit SpectralFrameOperator(const FilterBank& bank);

  ComplexVector Apply(std::span<const Complex> x) const;
  // Same operator on a DFT-domain input; returns the DFT of S x.
  ComplexVector ApplySpectrum(std::span<const Complex> spectrum) const;

  const FilterBank& expanded() const { return expanded_; }
  const RealVector& frequency_response() const { return response_; }

 private:
  FilterBank expanded_;
  RealVector response_;
};

RealVector FrequencyResponse(const FilterBank& bank);

// H_1 ... H_{D-1}; element n - 1 holds H_n. Memory is D L, so this is meant
// for inspection of small banks; AliasNorms streams instead.
std::vector<ComplexVector> AliasComponents(const FilterBank& bank);
RealVector AliasNorms(const FilterBank& bank);

// Every filter's support fits in an interval of at most L / d_k bins.
bool IsPainless(const FilterBank& bank);

inline constexpr std::size_t kDenseEigenMaxLength = 1024;

// painless-exact: (min H_0, max H_0), optimal; needs a painless bank.
// diag-dominance: (min(H_0 - alias), max(H_0 + alias)), lower clamped at 0.
// dense-eigen: extreme eigenvalues of the expanded atom system's frame
// operator; refused above `dense_ceiling`.
FrameReport EstimateBounds(const FilterBank& bank, BoundsMethod method,
                           std::size_t dense_ceiling = kDenseEigenMaxLength);

// S x through the Walnut sum, entirely in the DFT domain.
ComplexVector WalnutApply(const FilterBank& bank, std::span<const Complex> x);

// S x as synthesis with the adjoint bank after analysis.
ComplexVector ApplyFrameOperatorByComposition(const FilterBank& bank,
                                              std::span<const Complex> x);

// The bank as a dense frame: atoms conj(h_k[n d_k - .]) of the expanded bank,
// ordered channel-major.
FiniteFrame AtomSystem(const FilterBank& bank);

// Evaluates the alias-domain product of analysis and synthesis on every DFT
// bin. Target: a pure delay exp(-2 pi i j l / L) in the n = 0 term and zero
// for n >= 1. The delay is the exhaustive least-squares fit over all L
// candidates; the deviation is the maximum absolute error at that delay.
PRResidual PrResidual(const FilterBank& analysis, const FilterBank& synthesis);

// Splits channel k into q_k = D / d_k channels delayed by l d_k samples
// (l = 0 .. q_k - 1), all decimated by D. The frame is unchanged.
FilterBank EquivalentUniform(const FilterBank& bank);

// Line-oriented summary: method, painless flag, frame flag, bounds,
// condition number, redundancy and channel count.
std::string FormatReport(const FrameReport& report, const FilterBank& bank);

}  // namespace audlet

#endif  // AUDLET_FRAME_DIAGNOSTICS_H_
