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

#include "audlet/scales.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "audlet/error.h"

namespace audlet {
namespace {

constexpr double kErbFactor = 9.265;
constexpr double kErbCorner = 228.8455;  // = 24.7 * 9.265

void CheckFrequency(double freq_hz) {
  if (!std::isfinite(freq_hz) || freq_hz < 0.0) {
    throw Error(ErrorCode::kDomain,
                "frequency must be finite and non-negative, got " +
                    std::to_string(freq_hz));
  }
}

double BarkDerivative(double f) {
  const double a = 0.00076;
  const double u = f / 7500.0;
  return 13.0 * a / (1.0 + a * a * f * f) +
         3.5 * (2.0 * u / 7500.0) / (1.0 + u * u * u * u);
}

double InverseBark(double units) {
  double lo = 0.0;
  double hi = kBarkInversionCeilingHz;
  const double top = ScaleValue(AuditoryScale::kBark, hi);
  if (units > top) {
    throw Error(ErrorCode::kDomain,
                "Bark value " + std::to_string(units) +
                    " exceeds the invertible range [0, " + std::to_string(top) +
                    "]");
  }
  if (units == 0.0) return 0.0;
  // Newton from the midpoint of a shrinking bracket; falls back to bisection
  // whenever a step would leave the bracket.
  double f = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double g = ScaleValue(AuditoryScale::kBark, f) - units;
    if (g == 0.0) return f;
    if (g > 0.0) {
      hi = f;
    } else {
      lo = f;
    }
    double next = f - g / BarkDerivative(f);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - f) <= 1e-15 * std::max(1.0, f)) return next;
    f = next;
  }
  const double residual = std::abs(ScaleValue(AuditoryScale::kBark, f) - units);
  if (residual <= 1e-12 * std::max(1.0, units)) return f;
  throw Error(ErrorCode::kInternal, "Bark inversion did not converge");
}

}  // namespace

std::string_view ScaleName(AuditoryScale scale) {
  return scale == AuditoryScale::kErb ? "erb" : "bark";
}

AuditoryScale ParseScale(std::string_view name) {
  if (name == "erb") return AuditoryScale::kErb;
  if (name == "bark") return AuditoryScale::kBark;
  throw Error(ErrorCode::kDomain, "unknown auditory scale '" +
                                      std::string(name) + "'");
}

double Bandwidth(AuditoryScale scale, double freq_hz) {
  CheckFrequency(freq_hz);
  switch (scale) {
    case AuditoryScale::kErb:
      return 24.7 + freq_hz / kErbFactor;
    case AuditoryScale::kBark:
      return 25.0 + 75.0 * std::pow(1.0 + 1.4e-6 * freq_hz * freq_hz, 0.69);
  }
  return 0.0;
}

double ScaleValue(AuditoryScale scale, double freq_hz) {
  CheckFrequency(freq_hz);
  switch (scale) {
    case AuditoryScale::kErb:
      return kErbFactor * std::log1p(freq_hz / kErbCorner);
    case AuditoryScale::kBark: {
      const double u = freq_hz / 7500.0;
      return 13.0 * std::atan(0.00076 * freq_hz) + 3.5 * std::atan(u * u);
    }
  }
  return 0.0;
}

double InverseScale(AuditoryScale scale, double units) {
  if (!std::isfinite(units) || units < 0.0) {
    throw Error(ErrorCode::kDomain,
                "auditory units must be finite and non-negative, got " +
                    std::to_string(units));
  }
  switch (scale) {
    case AuditoryScale::kErb:
      return kErbCorner * std::expm1(units / kErbFactor);
    case AuditoryScale::kBark:
      return InverseBark(units);
  }
  return 0.0;
}

}  // namespace audlet
