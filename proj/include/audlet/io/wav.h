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

// RIFF/WAVE reading (PCM 16/24 bit, IEEE float 32 bit, first channel only)
// and 32-bit float mono writing.

#ifndef AUDLET_IO_WAV_H_
#define AUDLET_IO_WAV_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "audlet/types.h"

namespace audlet::io {

struct WavData {
  std::uint32_t sample_rate = 0;
  RealVector samples;  // first channel, full scale = 1
};

// Throws Error(kFormat) for malformed or unsupported data.
WavData DecodeWav(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> EncodeWavFloat32(std::uint32_t sample_rate,
                                           std::span<const double> samples);

// File wrappers; Error(kIo) when the file cannot be read or written.
WavData ReadWav(const std::string& path);
void WriteWavFloat32(const std::string& path, std::uint32_t sample_rate,
                     std::span<const double> samples);

std::vector<std::uint8_t> ReadFileBytes(const std::string& path);
void WriteFileBytes(const std::string& path, std::span<const std::uint8_t> bytes);

}  // namespace audlet::io

#endif  // AUDLET_IO_WAV_H_
