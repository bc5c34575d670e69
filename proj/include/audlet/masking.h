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

// Frame multipliers on filter bank coefficients and a simple spectral
// irrelevance filter.
//
// The irrelevance threshold of coefficient (k, n) is
//   max_{k'} ( level(k', n') - s(k, k') |z_k - z_k'| ) + offset
// where level is 20 log10(|c| / max |c|), z the auditory-scale position of
// the channel centre, n' the masker coefficient nearest in time, and s the
// lower slope when channel k lies below the masker, the upper one otherwise.

#ifndef AUDLET_MASKING_H_
#define AUDLET_MASKING_H_

#include <span>
#include <vector>

#include "audlet/filterbank.h"
#include "audlet/scales.h"
#include "audlet/types.h"

namespace audlet {

struct MaskSymbol {
  std::vector<RealVector> weights;  // congruent with SubbandCoefficients
  bool binary = false;

  static MaskSymbol Constant(const FilterBank& bank, double value);
  double SupNorm() const;
};

// Throws Error(kShape) on a layout mismatch, Error(kDomain) for non-finite
// weights or a binary flag contradicted by the contents.
void CheckMask(const FilterBank& bank, const MaskSymbol& mask);

SubbandCoefficients ApplyMask(const MaskSymbol& mask,
                              const SubbandCoefficients& coefficients);

// synthesize(synthesis, m . analyze(analysis, x)).
ComplexVector ApplyMultiplier(const MaskSymbol& mask, const FilterBank& synthesis,
                              const FilterBank& analysis,
                              std::span<const Complex> x);

struct IrrelevanceModel {
  double offset_db = -2.59;
  double spread_lower_db_per_unit = 27.0;  // toward lower frequencies
  double spread_upper_db_per_unit = 12.0;  // toward higher frequencies
  AuditoryScale scale = AuditoryScale::kErb;
};

void CheckModel(const IrrelevanceModel& model);

// Levels below this floor are clamped; an all-zero input has no reference
// and every level is -inf.
inline constexpr double kLevelFloorDb = -300.0;

std::vector<RealVector> CoefficientLevels(const SubbandCoefficients& coefficients);

// Threshold for one time slice given per-channel levels (dB) and positions
// on the auditory scale.
RealVector SpreadThreshold(std::span<const double> levels_db,
                           std::span<const double> positions,
                           const IrrelevanceModel& model);

std::vector<RealVector> IrrelevanceThreshold(
    const SubbandCoefficients& coefficients, const FilterBank& bank,
    const IrrelevanceModel& model);

struct IrrelevanceResult {
  SubbandCoefficients coefficients;  // masked
  MaskSymbol mask;                   // binary, 1 = kept
  double removal_fraction = 0.0;     // zeroed / total stored coefficients
};

IrrelevanceResult IrrelevanceFilter(const FilterBank& bank,
                                    std::span<const Complex> x,
                                    const IrrelevanceModel& model = {});

}  // namespace audlet

#endif  // AUDLET_MASKING_H_
