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

#include "audlet/io/matrix_export.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "audlet/io/number_format.h"

namespace audlet::io {
namespace {

std::size_t Width(const std::vector<RealVector>& rows) {
  std::size_t width = 0;
  for (const RealVector& r : rows) width = std::max(width, r.size());
  return width;
}

}  // namespace

std::vector<RealVector> MagnitudeDb(const SubbandCoefficients& coefficients,
                                    double floor_db) {
  std::vector<RealVector> out;
  out.reserve(coefficients.size());
  for (const ComplexVector& channel : coefficients) {
    RealVector row(channel.size(), floor_db);
    for (std::size_t n = 0; n < channel.size(); ++n) {
      const double magnitude = std::abs(channel[n]);
      if (magnitude > 0.0) row[n] = std::max(floor_db, 20.0 * std::log10(magnitude));
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::string EncodeCsv(const RealVector& labels, const std::vector<RealVector>& rows,
                      double pad) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ',';
    out += FormatDouble(labels[i]);
  }
  out += '\n';
  const std::size_t width = Width(rows);
  for (const RealVector& row : rows) {
    for (std::size_t n = 0; n < width; ++n) {
      if (n) out += ',';
      out += FormatDouble(n < row.size() ? row[n] : pad);
    }
    out += '\n';
  }
  return out;
}

std::vector<std::uint8_t> EncodePgm(const std::vector<RealVector>& rows,
                                    double floor) {
  const std::size_t width = Width(rows);
  double top = floor;
  for (const RealVector& r : rows) {
    for (double v : r) top = std::max(top, v);
  }
  const std::string header = "P5\n" + std::to_string(width) + " " +
                             std::to_string(rows.size()) + "\n65535\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  const double span = top - floor;
  for (const RealVector& row : rows) {
    for (std::size_t n = 0; n < width; ++n) {
      const double v = n < row.size() ? row[n] : floor;
      const double unit = span > 0.0 ? std::clamp((v - floor) / span, 0.0, 1.0) : 0.0;
      const auto level = static_cast<std::uint16_t>(std::lround(unit * 65535.0));
      out.push_back(static_cast<std::uint8_t>(level >> 8));  // big-endian
      out.push_back(static_cast<std::uint8_t>(level & 0xFF));
    }
  }
  return out;
}

}  // namespace audlet::io
