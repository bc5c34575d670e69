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

#include "audlet/io/wav.h"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>

#include "audlet/error.h"

namespace audlet::io {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint32_t ReadU32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | static_cast<std::uint32_t>(p[1]) << 8 |
         static_cast<std::uint32_t>(p[2]) << 16 | static_cast<std::uint32_t>(p[3]) << 24;
}

std::uint16_t ReadU16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | p[1] << 8);
}

void PutU32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void PutU16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kFormat, "WAV: " + what);
}

}  // namespace

WavData DecodeWav(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    Malformed("missing RIFF/WAVE header");
  }
  bool have_format = false;
  std::uint16_t format = 0, channels = 0, bits = 0, block_align = 0;
  std::uint32_t sample_rate = 0;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint8_t* chunk = bytes.data() + pos;
    const std::size_t size = ReadU32(chunk + 4);
    const std::size_t body = pos + 8;
    if (size > bytes.size() - body) Malformed("chunk exceeds file size");
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (size < 16) Malformed("short fmt chunk");
      const std::uint8_t* f = bytes.data() + body;
      format = ReadU16(f);
      channels = ReadU16(f + 2);
      sample_rate = ReadU32(f + 4);
      block_align = ReadU16(f + 12);
      bits = ReadU16(f + 14);
      if (format == kFormatExtensible) {
        if (size < 26) Malformed("short extensible fmt chunk");
        format = ReadU16(f + 24);
      }
      have_format = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      if (!have_format) Malformed("data chunk before fmt chunk");
      if (channels == 0 || sample_rate == 0) Malformed("zero channels or rate");
      const std::size_t width = bits / 8;
      const bool pcm = format == kFormatPcm && (bits == 16 || bits == 24);
      const bool flt = format == kFormatFloat && bits == 32;
      if (!pcm && !flt) {
        Malformed("unsupported encoding (format " + std::to_string(format) +
                  ", " + std::to_string(bits) + " bit)");
      }
      if (block_align != width * channels) Malformed("inconsistent block align");
      WavData out;
      out.sample_rate = sample_rate;
      const std::size_t frames = size / block_align;
      out.samples.resize(frames);
      const std::uint8_t* d = bytes.data() + body;
      for (std::size_t i = 0; i < frames; ++i) {
        const std::uint8_t* s = d + i * block_align;
        double v;
        if (flt) {
          v = std::bit_cast<float>(ReadU32(s));
        } else if (bits == 16) {
          v = static_cast<std::int16_t>(ReadU16(s)) / 32768.0;
        } else {
          std::int32_t raw = s[0] | s[1] << 8 | s[2] << 16;
          if (raw & 0x800000) raw -= 0x1000000;
          v = raw / 8388608.0;
        }
        if (!std::isfinite(v)) Malformed("non-finite sample");
        out.samples[i] = v;
      }
      return out;
    }
    pos = body + size + (size & 1);
  }
  Malformed("no data chunk");
}

std::vector<std::uint8_t> EncodeWavFloat32(std::uint32_t sample_rate,
                                           std::span<const double> samples) {
  const std::size_t data_bytes = samples.size() * 4;
  if (data_bytes > 0xFFFFFFFFu - 50) {
    throw Error(ErrorCode::kUnsupported, "WAV: signal too long for RIFF");
  }
  std::vector<std::uint8_t> out;
  out.reserve(58 + data_bytes);
  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  PutU32(out, static_cast<std::uint32_t>(50 + data_bytes));
  out.insert(out.end(), {'W', 'A', 'V', 'E', 'f', 'm', 't', ' '});
  PutU32(out, 18);
  PutU16(out, kFormatFloat);
  PutU16(out, 1);
  PutU32(out, sample_rate);
  PutU32(out, sample_rate * 4);
  PutU16(out, 4);
  PutU16(out, 32);
  PutU16(out, 0);
  out.insert(out.end(), {'f', 'a', 'c', 't'});
  PutU32(out, 4);
  PutU32(out, static_cast<std::uint32_t>(samples.size()));
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  PutU32(out, static_cast<std::uint32_t>(data_bytes));
  for (double v : samples) {
    PutU32(out, std::bit_cast<std::uint32_t>(static_cast<float>(v)));
  }
  return out;
}

std::vector<std::uint8_t> ReadFileBytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "' for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::kIo, "read error on '" + path + "'");
  return bytes;
}

void WriteFileBytes(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw Error(ErrorCode::kIo, "write error on '" + path + "'");
}

WavData ReadWav(const std::string& path) {
  const std::vector<std::uint8_t> bytes = ReadFileBytes(path);
  return DecodeWav(bytes);
}

void WriteWavFloat32(const std::string& path, std::uint32_t sample_rate,
                     std::span<const double> samples) {
  WriteFileBytes(path, EncodeWavFloat32(sample_rate, samples));
}

}  // namespace audlet::io
