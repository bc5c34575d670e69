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

#include "audlet/io/container.h"

#include <bit>
#include <cmath>
#include <cstring>
#include <sstream>

#include "audlet/error.h"
#include "audlet/io/number_format.h"
#include "audlet/io/wav.h"

namespace audlet::io {
namespace {

[[noreturn]] void Corrupt(const std::string& what) {
  throw Error(ErrorCode::kFormat, "container: " + what);
}

std::size_t ParseCount(const std::string& token) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos ||
      token.size() > 18) {
    Corrupt("bad integer '" + token + "'");
  }
  return static_cast<std::size_t>(std::stoull(token));
}

bool ParseFlag(const std::string& token) {
  if (token == "0") return false;
  if (token == "1") return true;
  Corrupt("bad flag '" + token + "'");
}

double ParseNumber(const std::string& token) {
  try {
    return ParseDouble(token);
  } catch (const Error&) {
    Corrupt("bad number '" + token + "'");
  }
}

void PutF64(std::vector<std::uint8_t>& out, double v) {
  const std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
}

double GetF64(const std::uint8_t* p) {
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return std::bit_cast<double>(bits);
}

// Reads "key value" and checks the key.
std::string Field(std::istringstream& header, const char* key) {
  std::string line;
  if (!std::getline(header, line)) Corrupt(std::string("missing '") + key + "'");
  std::istringstream fields(line);
  std::string name, value, extra;
  fields >> name >> value;
  if (name != key || value.empty() || (fields >> extra)) {
    Corrupt(std::string("expected '") + key + " <value>', got '" + line + "'");
  }
  return value;
}

}  // namespace

CoefficientContainer MakeContainer(const AudletParams& params, bool parseval,
                                   const FilterBank& bank,
                                   SubbandCoefficients coefficients,
                                   std::size_t original_length) {
  CheckCoefficients(bank, coefficients);
  CoefficientContainer c;
  c.params = params;
  c.params.length = bank.length();
  c.parseval = parseval;
  c.original_length = original_length;
  for (std::size_t k = 0; k < bank.size(); ++k) {
    ChannelMeta meta;
    meta.center_hz = k < bank.info().centers_hz.size() ? bank.info().centers_hz[k] : 0.0;
    meta.dilation_hz =
        k < bank.info().dilations_hz.size() ? bank.info().dilations_hz[k] : 0.0;
    meta.decimation = bank.decimation(k);
    c.channels.push_back(meta);
  }
  c.coefficients = std::move(coefficients);
  return c;
}

std::vector<std::uint8_t> EncodeContainer(const CoefficientContainer& c) {
  if (c.channels.size() != c.coefficients.size()) {
    throw Error(ErrorCode::kShape, "container metadata and payload differ");
  }
  const AudletParams& p = c.params;
  std::ostringstream h;
  h << kContainerMagic << ' ' << kContainerVersion << '\n'
    << "scale " << ScaleName(p.scale) << '\n'
    << "fmin " << FormatDouble(p.fmin_hz) << '\n'
    << "fmax " << FormatDouble(p.fmax_hz) << '\n'
    << "channels_per_unit " << FormatDouble(p.channels_per_unit) << '\n'
    << "rbw " << FormatDouble(p.bandwidth_factor) << '\n'
    << "rd " << FormatDouble(p.decimation_factor) << '\n'
    << "sample_rate " << FormatDouble(p.sample_rate) << '\n'
    << "length " << p.length << '\n'
    << "prototype " << PrototypeName(p.prototype) << '\n'
    << "dc_filter " << (p.dc_filter ? 1 : 0) << '\n'
    << "parseval " << (c.parseval ? 1 : 0) << '\n'
    << "original_length " << c.original_length << '\n'
    << "binary_mask " << (c.binary_mask ? 1 : 0) << '\n'
    << "channels " << c.channels.size() << '\n';
  for (std::size_t k = 0; k < c.channels.size(); ++k) {
    h << "channel " << k << ' ' << FormatDouble(c.channels[k].center_hz) << ' '
      << FormatDouble(c.channels[k].dilation_hz) << ' '
      << c.channels[k].decimation << '\n';
  }
  h << "end\n";
  const std::string text = h.str();
  std::vector<std::uint8_t> out(text.begin(), text.end());
  for (std::size_t k = 0; k < c.coefficients.size(); ++k) {
    if (c.channels[k].decimation == 0 ||
        c.coefficients[k].size() * c.channels[k].decimation != p.length) {
      throw Error(ErrorCode::kShape, "channel payload length is not L / d_k");
    }
    for (const Complex& v : c.coefficients[k]) {
      PutF64(out, v.real());
      PutF64(out, v.imag());
    }
  }
  return out;
}

CoefficientContainer DecodeContainer(std::span<const std::uint8_t> bytes) {
  static constexpr char kEnd[] = "\nend\n";
  const char* begin = reinterpret_cast<const char*>(bytes.data());
  const std::string_view view(begin, bytes.size());
  const std::size_t end = view.find(kEnd);
  if (end == std::string_view::npos) Corrupt("header terminator not found");
  std::istringstream header(std::string(view.substr(0, end + 1)));

  std::string line;
  std::getline(header, line);
  if (line != std::string(kContainerMagic) + " " + std::to_string(kContainerVersion)) {
    Corrupt("bad magic or unsupported version '" + line + "'");
  }
  CoefficientContainer c;
  AudletParams& p = c.params;
  try {
    p.scale = ParseScale(Field(header, "scale"));
    p.fmin_hz = ParseNumber(Field(header, "fmin"));
    p.fmax_hz = ParseNumber(Field(header, "fmax"));
    p.channels_per_unit = ParseNumber(Field(header, "channels_per_unit"));
    p.bandwidth_factor = ParseNumber(Field(header, "rbw"));
    p.decimation_factor = ParseNumber(Field(header, "rd"));
    p.sample_rate = ParseNumber(Field(header, "sample_rate"));
    p.length = ParseCount(Field(header, "length"));
    p.prototype = ParsePrototype(Field(header, "prototype"));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kFormat) throw;
    Corrupt(e.what());
  }
  p.dc_filter = ParseFlag(Field(header, "dc_filter"));
  c.parseval = ParseFlag(Field(header, "parseval"));
  c.original_length = ParseCount(Field(header, "original_length"));
  c.binary_mask = ParseFlag(Field(header, "binary_mask"));
  const std::size_t count = ParseCount(Field(header, "channels"));
  if (p.length == 0 || c.original_length > p.length) Corrupt("bad lengths");
  if (count == 0 || count > p.length) Corrupt("bad channel count");

  std::size_t payload = 0;
  for (std::size_t k = 0; k < count; ++k) {
    if (!std::getline(header, line)) Corrupt("missing channel line");
    std::istringstream fields(line);
    std::string tag, index, f, g, d, extra;
    fields >> tag >> index >> f >> g >> d;
    if (tag != "channel" || d.empty() || (fields >> extra) ||
        ParseCount(index) != k) {
      Corrupt("bad channel line '" + line + "'");
    }
    ChannelMeta meta{ParseNumber(f), ParseNumber(g), ParseCount(d)};
    if (meta.decimation == 0 || p.length % meta.decimation != 0) {
      Corrupt("decimation does not divide L");
    }
    payload += 16 * (p.length / meta.decimation);
    c.channels.push_back(meta);
  }
  if (std::getline(header, line)) Corrupt("trailing header line '" + line + "'");

  const std::size_t offset = end + std::strlen(kEnd);
  if (bytes.size() - offset != payload) {
    Corrupt("payload has " + std::to_string(bytes.size() - offset) +
            " bytes, header implies " + std::to_string(payload));
  }
  const std::uint8_t* data = bytes.data() + offset;
  for (const ChannelMeta& meta : c.channels) {
    ComplexVector channel(p.length / meta.decimation);
    for (Complex& v : channel) {
      v = Complex(GetF64(data), GetF64(data + 8));
      data += 16;
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        Corrupt("non-finite coefficient");
      }
    }
    c.coefficients.push_back(std::move(channel));
  }
  return c;
}

void WriteContainer(const std::string& path, const CoefficientContainer& container) {
  WriteFileBytes(path, EncodeContainer(container));
}

CoefficientContainer ReadContainer(const std::string& path) {
  return DecodeContainer(ReadFileBytes(path));
}

void CheckContainerMatchesBank(const CoefficientContainer& c, const FilterBank& bank) {
  if (bank.size() != c.channels.size() || bank.length() != c.params.length) {
    Corrupt("header does not describe the bank its parameters rebuild");
  }
  for (std::size_t k = 0; k < bank.size(); ++k) {
    const ChannelMeta& meta = c.channels[k];
    if (meta.decimation != bank.decimation(k) ||
        meta.center_hz != bank.info().centers_hz[k] ||
        meta.dilation_hz != bank.info().dilations_hz[k]) {
      Corrupt("channel " + std::to_string(k) + " metadata mismatch");
    }
  }
}

}  // namespace audlet::io
