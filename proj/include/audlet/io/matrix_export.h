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

// Ragged channel x frame matrices as CSV or 16-bit PGM. Short rows are
// padded to the longest with `pad`.

#ifndef AUDLET_IO_MATRIX_EXPORT_H_
#define AUDLET_IO_MATRIX_EXPORT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "audlet/types.h"

namespace audlet::io {

inline constexpr double kSpectrogramFloorDb = -100.0;

// 20 log10 |c|, clamped below at floor_db.
std::vector<RealVector> MagnitudeDb(const SubbandCoefficients& coefficients,
                                    double floor_db = kSpectrogramFloorDb);

// First line: the column labels (one per row of `rows`, e.g. f_k); then one
// line per row. Fields are comma separated with 17 significant digits.
std::string EncodeCsv(const RealVector& labels, const std::vector<RealVector>& rows,
                      double pad);

// Binary P5 with maxval 65535, one image row per matrix row, values mapped
// linearly from [floor, max] to [0, 65535].
std::vector<std::uint8_t> EncodePgm(const std::vector<RealVector>& rows,
                                    double floor);

}  // namespace audlet::io

#endif  // AUDLET_IO_MATRIX_EXPORT_H_
