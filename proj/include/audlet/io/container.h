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

// Coefficient container: a text header terminated by a line "end", then
// for each channel L / d_k little-endian float64 (re, im) pairs.
//
//   AUDLETCOEF 1
//   scale erb
//   ...               one "key value" line per bank parameter
//   channels K
//   channel k f_k Gamma_k d_k      (K lines)
//   end
//
// Masks use the same layout with binary_mask 1 and weights as (w, 0).

#ifndef AUDLET_IO_CONTAINER_H_
#define AUDLET_IO_CONTAINER_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "audlet/filterbank.h"
#include "audlet/types.h"

namespace audlet::io {

inline constexpr char kContainerMagic[] = "AUDLETCOEF";
inline constexpr int kContainerVersion = 1;

struct ChannelMeta {
  double center_hz = 0.0;
  double dilation_hz = 0.0;
  std::size_t decimation = 1;
};

struct CoefficientContainer {
  AudletParams params;          // params.length is the padded L
  bool parseval = false;        // bank was normalized to a Parseval frame
  std::size_t original_length = 0;
  bool binary_mask = false;
  std::vector<ChannelMeta> channels;
  SubbandCoefficients coefficients;
};

// Fills params, channel metadata and coefficients from a bank.
CoefficientContainer MakeContainer(const AudletParams& params, bool parseval,
                                   const FilterBank& bank,
                                   SubbandCoefficients coefficients,
                                   std::size_t original_length);

std::vector<std::uint8_t> EncodeContainer(const CoefficientContainer& container);
// Throws Error(kFormat) on any inconsistency between header and payload.
CoefficientContainer DecodeContainer(std::span<const std::uint8_t> bytes);

void WriteContainer(const std::string& path, const CoefficientContainer& container);
CoefficientContainer ReadContainer(const std::string& path);

// Throws Error(kFormat) unless the rebuilt bank matches the header metadata.
void CheckContainerMatchesBank(const CoefficientContainer& container,
                               const FilterBank& bank);

}  // namespace audlet::io

#endif  // AUDLET_IO_CONTAINER_H_
