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

// Non-uniform filter banks on C^L, realized in the frequency domain.
//
// Channel k has a transfer function H_k sampled on the L-point DFT grid and
// a downsampling factor d_k dividing L. Analysis produces
//   y_k = downsample(idft(dft(x) . H_k), d_k)            (L / d_k samples)
// and synthesis with filters G_k computes
//   x~ = sum_k idft(dft(upsample(c_k, d_k)) . G_k).
//
// Filters are band-limited in practice, so each one is stored as a circular
// support interval plus the values on it; bins outside the interval are 0.
//
// Real-signal layout: a channel may be flagged as a conjugate pair. It then
// stands for itself plus the mirrored filter conj(H_k(-xi)) whose
// coefficients, for real input, are the complex conjugates of its own.
// Synthesis adds that mirror implicitly (2 Re(.) for real signals) and every
// frame-theoretic quantity is computed on the expanded bank.

#ifndef AUDLET_FILTERBANK_H_
#define AUDLET_FILTERBANK_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "audlet/scales.h"
#include "audlet/types.h"

namespace audlet {

// Frequency response with circular support [offset, offset + values.size()).
struct BandFilter {
  std::size_t offset = 0;
  ComplexVector values;

  Complex At(std::size_t bin, std::size_t length) const;
  ComplexVector Dense(std::size_t length) const;
  std::size_t SupportLength() const { return values.size(); }

  // Smallest circular interval holding every nonzero bin of `response`.
  static BandFilter FromDense(std::span<const Complex> response);
};

// conj(H(-xi)) on the same grid: bin j takes conj(H[(L - j) mod L]).
BandFilter MirrorFilter(const BandFilter& filter, std::size_t length);

enum class Prototype { kHann, kGaussian, kRectangular };

std::string_view PrototypeName(Prototype prototype);
Prototype ParsePrototype(std::string_view name);

// Construction metadata carried along for serialization and masking.
struct BankInfo {
  std::string prototype = "custom";
  AuditoryScale scale = AuditoryScale::kErb;
  double fmin_hz = 0.0;
  double fmax_hz = 0.0;
  double channels_per_unit = 0.0;
  double bandwidth_factor = 1.0;     // r_bw
  double decimation_factor = 1.0;    // r_d
  bool dc_filter = true;
  RealVector centers_hz;             // f_k per channel
  RealVector dilations_hz;           // Gamma_k per channel
};

class FilterBank {
 public:
  // `conjugate_pairs` may be empty (no pairs). Throws Error(kShape) if a
  // factor does not divide L or sizes disagree, Error(kDomain) for
  // non-finite responses.
  FilterBank(std::size_t length, double sample_rate,
             std::vector<BandFilter> filters, std::vector<std::size_t> decimation,
             std::vector<bool> conjugate_pairs = {}, BankInfo info = {});

  std::size_t length() const { return length_; }
  double sample_rate() const { return sample_rate_; }
  std::size_t size() const { return filters_.size(); }

  const BandFilter& filter(std::size_t k) const { return filters_[k]; }
  const std::vector<BandFilter>& filters() const { return filters_; }
  std::size_t decimation(std::size_t k) const { return decimation_[k]; }
  const std::vector<std::size_t>& decimations() const { return decimation_; }
  bool conjugate_pair(std::size_t k) const { return conjugate_pairs_[k]; }
  bool has_conjugate_pairs() const;
  std::size_t subband_length(std::size_t k) const { return length_ / decimation_[k]; }
  const BankInfo& info() const { return info_; }

  // Same layout and metadata, different responses.
  FilterBank WithFilters(std::vector<BandFilter> filters) const;

  // sum_k m_k / d_k with m_k = 2 for conjugate pairs, else 1.
  double Redundancy() const;
  // Stored coefficients, sum_k L / d_k.
  std::size_t CoefficientCount() const;
  // Coefficients of the expanded frame (pairs counted twice).
  std::size_t FrameCoefficientCount() const;
  // lcm of all d_k; divides L.
  std::size_t CommonDecimation() const;

 private:
  std::size_t length_;
  double sample_rate_;
  std::vector<BandFilter> filters_;
  std::vector<std::size_t> decimation_;
  std::vector<bool> conjugate_pairs_;
  BankInfo info_;
};

// Pairs replaced by explicit mirror channels appended at the end; the result
// acts on C^L with plain complex-linear synthesis.
FilterBank ExpandConjugatePairs(const FilterBank& bank);

// Synthesis bank with G_k = conj(H_k): analysis followed by synthesis with it
// applies the frame operator.
FilterBank AdjointBank(const FilterBank& bank);

struct AudletParams {
  double fmin_hz = 0.0;
  double fmax_hz = 0.0;  // 0 selects the Nyquist frequency
  double channels_per_unit = 6.0;
  AuditoryScale scale = AuditoryScale::kErb;
  Prototype prototype = Prototype::kHann;
  double bandwidth_factor = 1.0;
  double decimation_factor = 1.0;
  double sample_rate = 16000.0;
  std::size_t length = 0;
  // Add a lowpass channel at 0 Hz when fmin > 0.
  bool dc_filter = true;
};

// Perceptually spaced bank of K + 1 channels for real signals: regular
// channels at F^-1(F(fmin) + k / V), an optional 0 Hz channel when fmin > 0
// and always one at Nyquist. Each filter is the prototype dilated by
// Gamma_k = r_bw BW(f_k) and rescaled to a common l2 energy; d_k is the
// largest divisor of L not exceeding min(L / support_k, r_d fs / BW(f_k)).
FilterBank BuildAudlet(const AudletParams& params);

// Number of regular (non DC, non Nyquist) channels: ceil(V (F(fmax) - F(fmin))).
std::size_t AudletRegularChannelCount(const AudletParams& params);

// Smallest L >= min_length that is a multiple of the largest power of two
// not exceeding any planned decimation bound, so every channel gets its
// intended factor.
std::size_t PlanAudletLength(const AudletParams& params, std::size_t min_length);

// Uniform bank of M modulated copies of `window_spectrum` (length L), channel
// m shifted by m L / M bins, all decimated by `time_step`. Requires a | L and
// M | L.
FilterBank BuildGabor(std::span<const Complex> window_spectrum,
                      std::size_t time_step, std::size_t channels,
                      double sample_rate = 1.0);

SubbandCoefficients ZeroCoefficients(const FilterBank& bank);
// Throws Error(kShape) unless coefficients match the bank's channel layout.
void CheckCoefficients(const FilterBank& bank,
                       const SubbandCoefficients& coefficients);

SubbandCoefficients Analyze(const FilterBank& bank, std::span<const Complex> x);
ComplexVector Synthesize(const FilterBank& bank,
                         const SubbandCoefficients& coefficients);

}  // namespace audlet

#endif  // AUDLET_FILTERBANK_H_
