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

#include "audlet/masking.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "audlet/error.h"

namespace audlet {

namespace {

double ThresholdAt(std::size_t k, std::span<const double> levels_db,
                   std::span<const double> positions,
                   const IrrelevanceModel& model) {
  const double minus_inf = -std::numeric_limits<double>::infinity();
  double best = minus_inf;
  for (std::size_t m = 0; m < levels_db.size(); ++m) {
    if (levels_db[m] == minus_inf) continue;
    const double distance = positions[k] - positions[m];
    const double slope = distance < 0.0 ? model.spread_lower_db_per_unit
                                        : model.spread_upper_db_per_unit;
    best = std::max(best, levels_db[m] - slope * std::abs(distance));
  }
  return best == minus_inf ? minus_inf : best + model.offset_db;
}

}  // namespace

MaskSymbol MaskSymbol::Constant(const FilterBank& bank, double value) {
  MaskSymbol mask;
  mask.binary = value == 0.0 || value == 1.0;
  for (std::size_t k = 0; k < bank.size(); ++k) {
    mask.weights.emplace_back(bank.subband_length(k), value);
  }
  return mask;
}

double MaskSymbol::SupNorm() const {
  double top = 0.0;
  for (const RealVector& w : weights) {
    for (double v : w) top = std::max(top, std::abs(v));
  }
  return top;
}

void CheckMask(const FilterBank& bank, const MaskSymbol& mask) {
  if (mask.weights.size() != bank.size()) {
    throw Error(ErrorCode::kShape, "mask channel count differs from bank");
  }
  for (std::size_t k = 0; k < bank.size(); ++k) {
    if (mask.weights[k].size() != bank.subband_length(k)) {
      throw Error(ErrorCode::kShape,
                  "mask channel " + std::to_string(k) + " has wrong length");
    }
    for (double v : mask.weights[k]) {
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::kDomain, "mask weights must be finite");
      }
      if (mask.binary && v != 0.0 && v != 1.0) {
        throw Error(ErrorCode::kDomain, "binary mask holds a non-binary weight");
      }
    }
  }
}

SubbandCoefficients ApplyMask(const MaskSymbol& mask,
                              const SubbandCoefficients& coefficients) {
  if (mask.weights.size() != coefficients.size()) {
    throw Error(ErrorCode::kShape, "mask and coefficients differ in channels");
  }
  SubbandCoefficients out = coefficients;
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (mask.weights[k].size() != out[k].size()) {
      throw Error(ErrorCode::kShape, "mask and coefficients differ in length");
    }
    for (std::size_t n = 0; n < out[k].size(); ++n) out[k][n] *= mask.weights[k][n];
  }
  return out;
}

ComplexVector ApplyMultiplier(const MaskSymbol& mask, const FilterBank& synthesis,
                              const FilterBank& analysis,
                              std::span<const Complex> x) {
  if (synthesis.length() != analysis.length() ||
      synthesis.decimations() != analysis.decimations()) {
    throw Error(ErrorCode::kShape, "analysis and synthesis layouts differ");
  }
  CheckMask(analysis, mask);
  return Synthesize(synthesis, ApplyMask(mask, Analyze(analysis, x)));
}

void CheckModel(const IrrelevanceModel& model) {
  if (!(model.spread_lower_db_per_unit > 0.0) ||
      !(model.spread_upper_db_per_unit > 0.0) ||
      std::isinf(model.spread_lower_db_per_unit) ||
      std::isinf(model.spread_upper_db_per_unit)) {
    throw Error(ErrorCode::kDomain, "spreading slopes must be positive and finite");
  }
  if (std::isnan(model.offset_db)) {
    throw Error(ErrorCode::kDomain, "offset must not be NaN");
  }
}

std::vector<RealVector> CoefficientLevels(const SubbandCoefficients& coefficients) {
  double peak = 0.0;
  for (const ComplexVector& channel : coefficients) {
    for (const Complex& c : channel) peak = std::max(peak, std::abs(c));
  }
  std::vector<RealVector> levels;
  levels.reserve(coefficients.size());
  for (const ComplexVector& channel : coefficients) {
    RealVector row(channel.size(), -std::numeric_limits<double>::infinity());
    if (peak > 0.0) {
      for (std::size_t n = 0; n < channel.size(); ++n) {
        const double ratio = std::abs(channel[n]) / peak;
        row[n] = ratio > 0.0 ? std::max(kLevelFloorDb, 20.0 * std::log10(ratio))
                             : kLevelFloorDb;
      }
    }
    levels.push_back(std::move(row));
  }
  return levels;
}

RealVector SpreadThreshold(std::span<const double> levels_db,
                           std::span<const double> positions,
                           const IrrelevanceModel& model) {
  CheckModel(model);
  if (levels_db.size() != positions.size()) {
    throw Error(ErrorCode::kShape, "levels and positions differ in size");
  }
  RealVector threshold(levels_db.size());
  for (std::size_t k = 0; k < levels_db.size(); ++k) {
    threshold[k] = ThresholdAt(k, levels_db, positions, model);
  }
  return threshold;
}

std::vector<RealVector> IrrelevanceThreshold(
    const SubbandCoefficients& coefficients, const FilterBank& bank,
    const IrrelevanceModel& model) {
  CheckModel(model);
  CheckCoefficients(bank, coefficients);
  const std::size_t channels = bank.size();
  if (bank.info().centers_hz.size() != channels) {
    throw Error(ErrorCode::kShape,
                "bank carries no centre frequencies for the masking model");
  }
  RealVector positions(channels);
  for (std::size_t k = 0; k < channels; ++k) {
    positions[k] = ScaleValue(model.scale, bank.info().centers_hz[k]);
  }
  const std::vector<RealVector> levels = CoefficientLevels(coefficients);
  std::vector<RealVector> threshold;
  threshold.reserve(channels);
  RealVector slice(channels);
  for (std::size_t k = 0; k < channels; ++k) {
    const std::size_t d = bank.decimation(k);
    RealVector row(bank.subband_length(k));
    for (std::size_t n = 0; n < row.size(); ++n) {
      // Masker coefficient of each channel closest to time n d_k.
      for (std::size_t m = 0; m < channels; ++m) {
        const std::size_t dm = bank.decimation(m);
        const std::size_t nm = ((n * d + dm / 2) / dm) % bank.subband_length(m);
        slice[m] = levels[m][nm];
      }
      row[n] = ThresholdAt(k, slice, positions, model);
    }
    threshold.push_back(std::move(row));
  }
  return threshold;
}

IrrelevanceResult IrrelevanceFilter(const FilterBank& bank,
                                    std::span<const Complex> x,
                                    const IrrelevanceModel& model) {
  IrrelevanceResult result;
  const SubbandCoefficients coefficients = Analyze(bank, x);
  const std::vector<RealVector> threshold =
      IrrelevanceThreshold(coefficients, bank, model);
  const std::vector<RealVector> levels = CoefficientLevels(coefficients);
  result.mask.binary = true;
  std::size_t total = 0;
  std::size_t removed = 0;
  for (std::size_t k = 0; k < bank.size(); ++k) {
    RealVector row(levels[k].size());
    for (std::size_t n = 0; n < row.size(); ++n) {
      row[n] = levels[k][n] >= threshold[k][n] ? 1.0 : 0.0;
      removed += row[n] == 0.0;
    }
    total += row.size();
    result.mask.weights.push_back(std::move(row));
  }
  result.coefficients = ApplyMask(result.mask, coefficients);
  result.removal_fraction =
      total == 0 ? 0.0 : static_cast<double>(removed) / static_cast<double>(total);
  return result;
}

}  // namespace audlet
