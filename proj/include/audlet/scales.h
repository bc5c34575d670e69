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

// Auditory frequency scales: critical bandwidth in Hz and the mapping from
// linear frequency to auditory units (ERB-rate or Bark) and back. These are
// the fixed moderate-level (30-70 dB) formulas of Glasberg & Moore and
// Zwicker & Terhardt.

#ifndef AUDLET_SCALES_H_
#define AUDLET_SCALES_H_

#include <string>
#include <string_view>

namespace audlet {

enum class AuditoryScale { kErb, kBark };

std::string_view ScaleName(AuditoryScale scale);
// Accepts "erb" or "bark"; throws Error(kDomain) otherwise.
AuditoryScale ParseScale(std::string_view name);

// Critical bandwidth in Hz at `freq_hz`.
//   ERB:  24.7 + f / 9.265
//   Bark: 25 + 75 (1 + 1.4e-6 f^2)^0.69
double Bandwidth(AuditoryScale scale, double freq_hz);

// Frequency in auditory units.
//   ERB:  9.265 ln(1 + f / 228.8455)
//   Bark: 13 atan(0.00076 f) + 3.5 atan((f / 7500)^2)
double ScaleValue(AuditoryScale scale, double freq_hz);

// Inverse of ScaleValue. The ERB inverse is closed form; the Bark inverse is
// bracketed on [0, kBarkInversionCeilingHz] and solved by safeguarded Newton
// iteration, so Bark units beyond ScaleValue(kBark, ceiling) are rejected.
double InverseScale(AuditoryScale scale, double units);

inline constexpr double kBarkInversionCeilingHz = 30000.0;

}  // namespace audlet

#endif  // AUDLET_SCALES_H_
