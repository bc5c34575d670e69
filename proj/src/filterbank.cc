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

#include "audlet/filterbank.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "audlet/dsp.h"
#include "audlet/error.h"
#include "audlet/simd/kernels.h"
#include "spectral_runs.h"

namespace audlet {
namespace {

// Gaussian prototype exp(-4 ln2 t^2): half amplitude at |t| = 1/2, cut where
// it drops below 1e-8.
constexpr double kGaussRate = 4.0 * std::numbers::ln2;
const double kGaussHalfSupport = std::sqrt(std::log(1e8) / kGaussRate);

double PrototypeValue(Prototype prototype, double t) {
  switch (prototype) {
    case Prototype::kHann: {
      if (std::abs(t) >= 0.5) return 0.0;
      const double c = std::cos(std::numbers::pi * t);
      return c * c;
    }
    case Prototype::kGaussian:
      if (std::abs(t) > kGaussHalfSupport) return 0.0;
      return std::exp(-kGaussRate * t * t);
    case Prototype::kRectangular:
      return std::abs(t) <= 0.5 ? 1.0 : 0.0;
  }
  return 0.0;
}

// Full support width of the prototype in units of its dilation.
double PrototypeSupport(Prototype prototype) {
  return prototype == Prototype::kGaussian ? 2.0 * kGaussHalfSupport : 1.0;
}

// Integral of w^2 over its support.
double PrototypeEnergy(Prototype prototype) {
  switch (prototype) {
    case Prototype::kHann:
      return 3.0 / 8.0;
    case Prototype::kGaussian:
      return std::sqrt(std::numbers::pi / (2.0 * kGaussRate)) *
             std::erf(std::sqrt(2.0 * kGaussRate) * kGaussHalfSupport);
    case Prototype::kRectangular:
      return 1.0;
  }
  return 1.0;
}

struct ChannelPlan {
  double center_hz;
  double dilation_hz;
  double bandwidth_hz;  // BW_AUD at the center, drives d_k
  bool conjugate_pair;
};

void ValidateParams(const AudletParams& p) {
  const double nyquist = 0.5 * p.sample_rate;
  if (!(p.sample_rate > 0.0) || !std::isfinite(p.sample_rate)) {
    throw Error(ErrorCode::kDomain, "sample rate must be positive");
  }
  const double fmax = p.fmax_hz > 0.0 ? p.fmax_hz : nyquist;
  if (!(p.fmin_hz >= 0.0) || !(p.fmin_hz < fmax) || !(fmax <= nyquist) ||
      !std::isfinite(fmax)) {
    throw Error(ErrorCode::kDomain,
                "invalid frequency range: need 0 <= fmin < fmax <= fs/2");
  }
  if (!(p.channels_per_unit > 0.0) || !std::isfinite(p.channels_per_unit)) {
    throw Error(ErrorCode::kDomain, "channels per scale unit must be positive");
  }
  if (!(p.bandwidth_factor > 0.0) || !(p.decimation_factor > 0.0)) {
    throw Error(ErrorCode::kDomain, "r_bw and r_d must be positive");
  }
}

double ResolvedFmax(const AudletParams& p) {
  return p.fmax_hz > 0.0 ? p.fmax_hz : 0.5 * p.sample_rate;
}

std::vector<ChannelPlan> PlanChannels(const AudletParams& p) {
  ValidateParams(p);
  const double nyquist = 0.5 * p.sample_rate;
  const double support = PrototypeSupport(p.prototype);
  const double first_unit = ScaleValue(p.scale, p.fmin_hz);
  const std::size_t regular = AudletRegularChannelCount(p);

  std::vector<ChannelPlan> regular_plan;
  regular_plan.reserve(regular);
  for (std::size_t k = 0; k < regular; ++k) {
    const double f = InverseScale(
        p.scale, first_unit + static_cast<double>(k) / p.channels_per_unit);
    const double bw = Bandwidth(p.scale, f);
    regular_plan.push_back({f, p.bandwidth_factor * bw, bw, f > 0.0});
  }

  std::vector<ChannelPlan> plan;
  plan.reserve(regular + 2);
  if (p.fmin_hz > 0.0 && p.dc_filter) {
    // Lowpass channel reaching up to the first regular center.
    const double bw = Bandwidth(p.scale, 0.0);
    const double reach = 2.0 * regular_plan.front().center_hz / support;
    plan.push_back({0.0, std::max(p.bandwidth_factor * bw, reach), bw, false});
  }
  plan.insert(plan.end(), regular_plan.begin(), regular_plan.end());
  {
    // Nyquist channel reaching down to the last regular center.
    const double bw = Bandwidth(p.scale, nyquist);
    const double reach =
        2.0 * (nyquist - regular_plan.back().center_hz) / support;
    plan.push_back({nyquist, std::max(p.bandwidth_factor * bw, reach), bw, false});
  }
  return plan;
}

std::vector<std::size_t> Divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      out.push_back(i);
      if (i != n / i) out.push_back(n / i);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t LargestDivisorAtMost(const std::vector<std::size_t>& divisors,
                                 double bound) {
  std::size_t best = 1;
  for (std::size_t d : divisors) {
    if (static_cast<double>(d) <= bound) best = d;
  }
  return best;
}

BandFilter SampleFilter(Prototype prototype, double center_hz,
                        double dilation_hz, double sample_rate,
                        std::size_t length) {
  const double bin_hz = sample_rate / static_cast<double>(length);
  const double half = 0.5 * PrototypeSupport(prototype) * dilation_hz;
  auto lo = static_cast<long long>(std::ceil((center_hz - half) / bin_hz));
  auto hi = static_cast<long long>(std::floor((center_hz + half) / bin_hz));
  const auto len = static_cast<long long>(length);
  if (hi - lo + 1 > len) {
    lo = std::llround(center_hz / bin_hz) - len / 2;
    hi = lo + len - 1;
  }
  ComplexVector values;
  values.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long long b = lo; b <= hi; ++b) {
    const double t = (static_cast<double>(b) * bin_hz - center_hz) / dilation_hz;
    values.emplace_back(PrototypeValue(prototype, t), 0.0);
  }
  // Trim exact zeros at the edges of the interval.
  std::size_t first = 0;
  while (first < values.size() && values[first] == Complex(0.0)) ++first;
  std::size_t last = values.size();
  while (last > first && values[last - 1] == Complex(0.0)) --last;
  if (first == last) {
    // Narrower than one bin: keep the nearest bin.
    const long long b = std::llround(center_hz / bin_hz);
    return {static_cast<std::size_t>(((b % len) + len) % len), {Complex(1.0)}};
  }
  BandFilter filter;
  filter.offset =
      static_cast<std::size_t>((((lo + static_cast<long long>(first)) % len) + len) % len);
  filter.values.assign(values.begin() + static_cast<std::ptrdiff_t>(first),
                       values.begin() + static_cast<std::ptrdiff_t>(last));
  return filter;
}

void RescaleEnergy(BandFilter& filter, double target) {
  double energy = 0.0;
  for (const Complex& v : filter.values) energy += std::norm(v);
  const double gain = std::sqrt(target / energy);
  for (Complex& v : filter.values) v *= gain;
}

}  // namespace

Complex BandFilter::At(std::size_t bin, std::size_t length) const {
  const std::size_t rel = (bin + length - offset % length) % length;
  return rel < values.size() ? values[rel] : Complex(0.0);
}

ComplexVector BandFilter::Dense(std::size_t length) const {
  ComplexVector out(length);
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[(offset + i) % length] = values[i];
  }
  return out;
}

BandFilter BandFilter::FromDense(std::span<const Complex> response) {
  const std::size_t n = response.size();
  std::vector<std::size_t> nonzero;
  for (std::size_t j = 0; j < n; ++j) {
    if (response[j] != Complex(0.0)) nonzero.push_back(j);
  }
  if (nonzero.empty()) return {0, {}};
  // The complement of the largest circular gap between nonzero bins.
  std::size_t best_gap = 0;
  std::size_t start = nonzero.front();
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    const std::size_t cur = nonzero[i];
    const std::size_t next = nonzero[(i + 1) % nonzero.size()];
    const std::size_t gap = (next + n - cur) % n;  // bins from cur to next
    const std::size_t effective = nonzero.size() == 1 ? n : gap;
    if (effective > best_gap) {
      best_gap = effective;
      start = next;
    }
  }
  const std::size_t support = n - best_gap + 1;
  BandFilter filter;
  filter.offset = start;
  filter.values.resize(support);
  for (std::size_t i = 0; i < support; ++i) {
    filter.values[i] = response[(start + i) % n];
  }
  return filter;
}

BandFilter MirrorFilter(const BandFilter& filter, std::size_t length) {
  BandFilter out;
  const std::size_t size = filter.values.size();
  if (size == 0) return out;
  out.offset = (2 * length - filter.offset % length - size + 1) % length;
  out.values.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    out.values[i] = std::conj(filter.values[size - 1 - i]);
  }
  return out;
}

std::string_view PrototypeName(Prototype prototype) {
  switch (prototype) {
    case Prototype::kHann: return "hann";
    case Prototype::kGaussian: return "gauss";
    case Prototype::kRectangular: return "rect";
  }
  return "hann";
}

Prototype ParsePrototype(std::string_view name) {
  if (name == "hann") return Prototype::kHann;
  if (name == "gauss") return Prototype::kGaussian;
  if (name == "rect") return Prototype::kRectangular;
  throw Error(ErrorCode::kDomain, "unknown prototype '" + std::string(name) + "'");
}

FilterBank::FilterBank(std::size_t length, double sample_rate,
                       std::vector<BandFilter> filters,
                       std::vector<std::size_t> decimation,
                       std::vector<bool> conjugate_pairs, BankInfo info)
    : length_(length),
      sample_rate_(sample_rate),
      filters_(std::move(filters)),
      decimation_(std::move(decimation)),
      conjugate_pairs_(std::move(conjugate_pairs)),
      info_(std::move(info)) {
  if (length_ == 0) throw Error(ErrorCode::kShape, "filter bank length is 0");
  if (filters_.empty()) throw Error(ErrorCode::kShape, "filter bank has no channels");
  if (decimation_.size() != filters_.size()) {
    throw Error(ErrorCode::kShape, "one decimation factor per channel required");
  }
  if (conjugate_pairs_.empty()) conjugate_pairs_.assign(filters_.size(), false);
  if (conjugate_pairs_.size() != filters_.size()) {
    throw Error(ErrorCode::kShape, "one conjugate-pair flag per channel required");
  }
  for (std::size_t k = 0; k < filters_.size(); ++k) {
    const std::size_t d = decimation_[k];
    if (d == 0 || length_ % d != 0) {
      throw Error(ErrorCode::kShape, "channel " + std::to_string(k) +
                                         ": decimation " + std::to_string(d) +
                                         " does not divide L=" +
                                         std::to_string(length_));
    }
    BandFilter& f = filters_[k];
    if (f.values.size() > length_) {
      throw Error(ErrorCode::kShape, "channel " + std::to_string(k) +
                                         ": support longer than L");
    }
    f.offset %= length_;
    for (const Complex& v : f.values) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw Error(ErrorCode::kDomain, "channel " + std::to_string(k) +
                                            ": non-finite filter response");
      }
    }
  }
}

bool FilterBank::has_conjugate_pairs() const {
  return std::any_of(conjugate_pairs_.begin(), conjugate_pairs_.end(),
                     [](bool b) { return b; });
}

FilterBank FilterBank::WithFilters(std::vector<BandFilter> filters) const {
  return FilterBank(length_, sample_rate_, std::move(filters), decimation_,
                    conjugate_pairs_, info_);
}

double FilterBank::Redundancy() const {
  double r = 0.0;
  for (std::size_t k = 0; k < size(); ++k) {
    r += (conjugate_pairs_[k] ? 2.0 : 1.0) / static_cast<double>(decimation_[k]);
  }
  return r;
}

std::size_t FilterBank::CoefficientCount() const {
  std::size_t n = 0;
  for (std::size_t k = 0; k < size(); ++k) n += subband_length(k);
  return n;
}

std::size_t FilterBank::FrameCoefficientCount() const {
  std::size_t n = 0;
  for (std::size_t k = 0; k < size(); ++k) {
    n += (conjugate_pairs_[k] ? 2 : 1) * subband_length(k);
  }
  return n;
}

std::size_t FilterBank::CommonDecimation() const {
  std::size_t d = 1;
  for (std::size_t dk : decimation_) d = std::lcm(d, dk);
  return d;
}

FilterBank ExpandConjugatePairs(const FilterBank& bank) {
  std::vector<BandFilter> filters = bank.filters();
  std::vector<std::size_t> decimation = bank.decimations();
  BankInfo info = bank.info();
  for (std::size_t k = 0; k < bank.size(); ++k) {
    if (!bank.conjugate_pair(k)) continue;
    filters.push_back(MirrorFilter(bank.filter(k), bank.length()));
    decimation.push_back(bank.decimation(k));
    if (k < info.centers_hz.size()) info.centers_hz.push_back(-info.centers_hz[k]);
    if (k < info.dilations_hz.size()) info.dilations_hz.push_back(info.dilations_hz[k]);
  }
  return FilterBank(bank.length(), bank.sample_rate(), std::move(filters),
                    std::move(decimation), {}, std::move(info));
}

FilterBank AdjointBank(const FilterBank& bank) {
  std::vector<BandFilter> filters = bank.filters();
  for (BandFilter& f : filters) {
    for (Complex& v : f.values) v = std::conj(v);
  }
  return bank.WithFilters(std::move(filters));
}

std::size_t AudletRegularChannelCount(const AudletParams& params) {
  ValidateParams(params);
  const double span = ScaleValue(params.scale, ResolvedFmax(params)) -
                      ScaleValue(params.scale, params.fmin_hz);
  // Guard against V * span landing a hair above an integer.
  const double count = std::ceil(params.channels_per_unit * span - 1e-9);
  return std::max<std::size_t>(1, static_cast<std::size_t>(count));
}

std::size_t PlanAudletLength(const AudletParams& params,
                             std::size_t min_length) {
  const std::vector<ChannelPlan> plan = PlanChannels(params);
  const double support = PrototypeSupport(params.prototype);
  double max_bound = 1.0;
  for (const ChannelPlan& c : plan) {
    const double bound =
        std::min(params.sample_rate / (support * c.dilation_hz),
                 params.decimation_factor * params.sample_rate / c.bandwidth_hz);
    max_bound = std::max(max_bound, bound);
  }
  std::size_t block = 1;
  while (static_cast<double>(block * 2) <= max_bound) block *= 2;
  const std::size_t n = std::max<std::size_t>(min_length, 1);
  return (n + block - 1) / block * block;
}

FilterBank BuildAudlet(const AudletParams& params) {
  const std::vector<ChannelPlan> plan = PlanChannels(params);
  const std::size_t length = params.length;
  if (length == 0) throw Error(ErrorCode::kShape, "AUDlet length must be >= 1");
  const std::vector<std::size_t> divisors = Divisors(length);
  const double energy = static_cast<double>(length) / params.sample_rate *
                        PrototypeEnergy(params.prototype);

  std::vector<BandFilter> filters;
  std::vector<std::size_t> decimation;
  std::vector<bool> pairs;
  BankInfo info;
  info.prototype = std::string(PrototypeName(params.prototype));
  info.scale = params.scale;
  info.fmin_hz = params.fmin_hz;
  info.fmax_hz = ResolvedFmax(params);
  info.channels_per_unit = params.channels_per_unit;
  info.bandwidth_factor = params.bandwidth_factor;
  info.decimation_factor = params.decimation_factor;
  info.dc_filter = params.dc_filter;

  for (const ChannelPlan& c : plan) {
    BandFilter f = SampleFilter(params.prototype, c.center_hz, c.dilation_hz,
                                params.sample_rate, length);
    RescaleEnergy(f, energy);
    const double bound = std::min(
        static_cast<double>(length) / static_cast<double>(f.SupportLength()),
        params.decimation_factor * params.sample_rate / c.bandwidth_hz);
    decimation.push_back(LargestDivisorAtMost(divisors, bound));
    filters.push_back(std::move(f));
    pairs.push_back(c.conjugate_pair);
    info.centers_hz.push_back(c.center_hz);
    info.dilations_hz.push_back(c.dilation_hz);
  }
  return FilterBank(length, params.sample_rate, std::move(filters),
                    std::move(decimation), std::move(pairs), std::move(info));
}

FilterBank BuildGabor(std::span<const Complex> window_spectrum,
                      std::size_t time_step, std::size_t channels,
                      double sample_rate) {
  const std::size_t length = window_spectrum.size();
  if (length == 0 || time_step == 0 || channels == 0 ||
      length % time_step != 0 || length % channels != 0) {
    throw Error(ErrorCode::kShape, "Gabor bank needs a | L and M | L");
  }
  const BandFilter base = BandFilter::FromDense(window_spectrum);
  const std::size_t shift = length / channels;
  std::vector<BandFilter> filters;
  BankInfo info;
  info.prototype = "gabor";
  for (std::size_t m = 0; m < channels; ++m) {
    BandFilter f = base;
    f.offset = (base.offset + m * shift) % length;
    filters.push_back(std::move(f));
    info.centers_hz.push_back(sample_rate * static_cast<double>(m) /
                              static_cast<double>(channels));
    info.dilations_hz.push_back(0.0);
  }
  return FilterBank(length, sample_rate, std::move(filters),
                    std::vector<std::size_t>(channels, time_step), {},
                    std::move(info));
}

SubbandCoefficients ZeroCoefficients(const FilterBank& bank) {
  SubbandCoefficients out(bank.size());
  for (std::size_t k = 0; k < bank.size(); ++k) {
    out[k].assign(bank.subband_length(k), Complex(0.0));
  }
  return out;
}

void CheckCoefficients(const FilterBank& bank,
                       const SubbandCoefficients& coefficients) {
  if (coefficients.size() != bank.size()) {
    throw Error(ErrorCode::kShape,
                "expected " + std::to_string(bank.size()) + " channels, got " +
                    std::to_string(coefficients.size()));
  }
  for (std::size_t k = 0; k < bank.size(); ++k) {
    if (coefficients[k].size() != bank.subband_length(k)) {
      throw Error(ErrorCode::kShape,
                  "channel " + std::to_string(k) + " expects " +
                      std::to_string(bank.subband_length(k)) + " samples, got " +
                      std::to_string(coefficients[k].size()));
    }
  }
}

SubbandCoefficients Analyze(const FilterBank& bank, std::span<const Complex> x) {
  if (x.size() != bank.length()) {
    throw Error(ErrorCode::kShape,
                "signal length " + std::to_string(x.size()) +
                    " does not match bank length " + std::to_string(bank.length()));
  }
  const ComplexVector spectrum = Dft(x);
  const auto& kernels = simd::Kernels();
  const std::size_t length = bank.length();
  SubbandCoefficients out(bank.size());
  for (std::size_t k = 0; k < bank.size(); ++k) {
    const std::size_t period = bank.subband_length(k);
    const BandFilter& filter = bank.filter(k);
    ComplexVector folded(period);
    internal::ForEachRun(filter, length, period,
                         [&](std::size_t i, std::size_t bin, std::size_t run) {
                           kernels.mul_acc(folded.data() + bin % period,
                                           filter.values.data() + i,
                                           spectrum.data() + bin, run);
                         });
    IdftInPlace(folded);
    const double scale = 1.0 / static_cast<double>(bank.decimation(k));
    for (Complex& v : folded) v *= scale;
    out[k] = std::move(folded);
  }
  return out;
}

ComplexVector Synthesize(const FilterBank& bank,
                         const SubbandCoefficients& coefficients) {
  CheckCoefficients(bank, coefficients);
  const auto& kernels = simd::Kernels();
  const std::size_t length = bank.length();
  ComplexVector direct(length);
  ComplexVector paired(bank.has_conjugate_pairs() ? length : 0);
  for (std::size_t k = 0; k < bank.size(); ++k) {
    const std::size_t period = bank.subband_length(k);
    ComplexVector sub = coefficients[k];
    DftInPlace(sub);
    ComplexVector& acc = bank.conjugate_pair(k) ? paired : direct;
    const BandFilter& filter = bank.filter(k);
    internal::ForEachRun(filter, length, period,
                         [&](std::size_t i, std::size_t bin, std::size_t run) {
                           kernels.mul_acc(acc.data() + bin,
                                           filter.values.data() + i,
                                           sub.data() + bin % period, run);
                         });
  }
  if (!paired.empty()) {
    // Mirror channels carry conj(c_k): their spectrum is conj(P(-xi)).
    for (std::size_t j = 0; j < length; ++j) {
      direct[j] += paired[j] + std::conj(paired[(length - j) % length]);
    }
  }
  IdftInPlace(direct);
  return direct;
}

}  // namespace audlet
