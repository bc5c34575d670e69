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

#include "audlet/frame_diagnostics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "audlet/dsp.h"
#include "audlet/error.h"
#include "audlet/io/number_format.h"
#include "audlet/simd/kernels.h"
#include "spectral_runs.h"

namespace audlet {
namespace {

// Adds sum_{k : q_k | n} left_k[j] * right_k[j - n L / D] / d_k into `out`
// for every bin j, where left_k is conj(H_k) or G_k depending on
// `conjugate_left`. Both banks must share their channel layout.
void AccumulateAliasTerm(const FilterBank& left, const FilterBank& right,
                         bool conjugate_left, std::size_t n,
                         std::size_t common, ComplexVector& out) {
  const std::size_t length = left.length();
  const std::size_t shift = n * (length / common);
  const auto& kernels = simd::Kernels();
  ComplexVector shifted;
  for (std::size_t k = 0; k < left.size(); ++k) {
    const std::size_t q = common / left.decimation(k);
    if (n % q != 0) continue;
    const BandFilter& lf = left.filter(k);
    const BandFilter& rf = right.filter(k);
    if (lf.values.empty() || rf.values.empty()) continue;
    shifted.resize(lf.values.size());
    bool any = false;
    for (std::size_t i = 0; i < lf.values.size(); ++i) {
      const std::size_t bin = (lf.offset + i) % length;
      shifted[i] = rf.At((bin + length - shift) % length, length);
      any = any || shifted[i] != Complex(0.0);
    }
    if (!any) continue;
    const double scale = 1.0 / static_cast<double>(left.decimation(k));
    for (Complex& v : shifted) v *= scale;
    internal::ForEachRun(lf, length, length,
                         [&](std::size_t i, std::size_t bin, std::size_t run) {
                           if (conjugate_left) {
                             kernels.conj_mul_acc(out.data() + bin,
                                                  lf.values.data() + i,
                                                  shifted.data() + i, run);
                           } else {
                             kernels.mul_acc(out.data() + bin,
                                             lf.values.data() + i,
                                             shifted.data() + i, run);
                           }
                         });
  }
}

std::size_t TrimmedSupport(const BandFilter& filter) {
  std::size_t first = 0;
  std::size_t last = filter.values.size();
  while (first < last && filter.values[first] == Complex(0.0)) ++first;
  while (last > first && filter.values[last - 1] == Complex(0.0)) --last;
  return last - first;
}

RealVector ResponseOfExpanded(const FilterBank& expanded) {
  const std::size_t length = expanded.length();
  RealVector response(length, 0.0);
  const auto& kernels = simd::Kernels();
  for (std::size_t k = 0; k < expanded.size(); ++k) {
    const BandFilter& f = expanded.filter(k);
    const double scale = 1.0 / static_cast<double>(expanded.decimation(k));
    internal::ForEachRun(f, length, length,
                         [&](std::size_t i, std::size_t bin, std::size_t run) {
                           kernels.norm_acc(response.data() + bin,
                                            f.values.data() + i, scale, run);
                         });
  }
  return response;
}

RealVector AliasNormsOfExpanded(const FilterBank& expanded) {
  const std::size_t length = expanded.length();
  const std::size_t common = expanded.CommonDecimation();
  RealVector norms(length, 0.0);
  ComplexVector term(length);
  for (std::size_t n = 1; n < common; ++n) {
    std::fill(term.begin(), term.end(), Complex(0.0));
    AccumulateAliasTerm(expanded, expanded, true, n, common, term);
    for (std::size_t j = 0; j < length; ++j) norms[j] += std::abs(term[j]);
  }
  return norms;
}

}  // namespace

std::string_view BoundsMethodName(BoundsMethod method) {
  switch (method) {
    case BoundsMethod::kPainlessExact: return "painless-exact";
    case BoundsMethod::kDiagonalDominance: return "diag-dominance";
    case BoundsMethod::kDenseEigen: return "dense-eigen";
  }
  return "painless-exact";
}

BoundsMethod ParseBoundsMethod(std::string_view name) {
  if (name == "painless-exact" || name == "painless") return BoundsMethod::kPainlessExact;
  if (name == "diag-dominance" || name == "diag") return BoundsMethod::kDiagonalDominance;
  if (name == "dense-eigen" || name == "eigen") return BoundsMethod::kDenseEigen;
  throw Error(ErrorCode::kDomain, "unknown bounds method '" + std::string(name) + "'");
}

double FrameReport::condition_number() const {
  if (!(bounds.lower > 0.0)) return std::numeric_limits<double>::infinity();
  return bounds.upper / bounds.lower;
}

SpectralFrameOperator::SpectralFrameOperator(const FilterBank& bank)
    : expanded_(ExpandConjugatePairs(bank)),
      response_(ResponseOfExpanded(expanded_)) {}

ComplexVector SpectralFrameOperator::ApplySpectrum(
    std::span<const Complex> spectrum) const {
  const std::size_t length = expanded_.length();
  if (spectrum.size() != length) {
    throw Error(ErrorCode::kShape, "frame operator input has wrong length");
  }
  const auto& kernels = simd::Kernels();
  ComplexVector out(length);
  ComplexVector folded;
  for (std::size_t k = 0; k < expanded_.size(); ++k) {
    const BandFilter& f = expanded_.filter(k);
    const std::size_t period = expanded_.subband_length(k);
    folded.assign(period, Complex(0.0));
    internal::ForEachRun(f, length, period,
                         [&](std::size_t i, std::size_t bin, std::size_t run) {
                           kernels.mul_acc(folded.data() + bin % period,
                                           f.values.data() + i,
                                           spectrum.data() + bin, run);
                         });
    const double scale = 1.0 / static_cast<double>(expanded_.decimation(k));
    for (Complex& v : folded) v *= scale;
    internal::ForEachRun(f, length, period,
                         [&](std::size_t i, std::size_t bin, std::size_t run) {
                           kernels.conj_mul_acc(out.data() + bin,
                                                f.values.data() + i,
                                                folded.data() + bin % period, run);
                         });
  }
  return out;
}

ComplexVector SpectralFrameOperator::Apply(std::span<const Complex> x) const {
  if (x.size() != expanded_.length()) {
    throw Error(ErrorCode::kShape, "frame operator input has wrong length");
  }
  ComplexVector spectrum = Dft(x);
  ComplexVector out = ApplySpectrum(spectrum);
  IdftInPlace(out);
  return out;
}

RealVector FrequencyResponse(const FilterBank& bank) {
  return ResponseOfExpanded(ExpandConjugatePairs(bank));
}

std::vector<ComplexVector> AliasComponents(const FilterBank& bank) {
  const FilterBank expanded = ExpandConjugatePairs(bank);
  const std::size_t common = expanded.CommonDecimation();
  std::vector<ComplexVector> out;
  out.reserve(common > 0 ? common - 1 : 0);
  for (std::size_t n = 1; n < common; ++n) {
    ComplexVector term(expanded.length());
    AccumulateAliasTerm(expanded, expanded, true, n, common, term);
    out.push_back(std::move(term));
  }
  return out;
}

RealVector AliasNorms(const FilterBank& bank) {
  return AliasNormsOfExpanded(ExpandConjugatePairs(bank));
}

bool IsPainless(const FilterBank& bank) {
  for (std::size_t k = 0; k < bank.size(); ++k) {
    if (TrimmedSupport(bank.filter(k)) > bank.subband_length(k)) return false;
  }
  return true;
}

FrameReport EstimateBounds(const FilterBank& bank, BoundsMethod method,
                           std::size_t dense_ceiling) {
  FrameReport report;
  report.method = method;
  report.painless = IsPainless(bank);
  const FilterBank expanded = ExpandConjugatePairs(bank);
  report.frequency_response = ResponseOfExpanded(expanded);
  const auto [lo, hi] = std::minmax_element(report.frequency_response.begin(),
                                            report.frequency_response.end());
  switch (method) {
    case BoundsMethod::kPainlessExact:
      if (!report.painless) {
        throw Error(ErrorCode::kUnsupported,
                    "painless-exact bounds requested for a bank whose filters "
                    "exceed their painless support");
      }
      report.alias_norms.assign(bank.length(), 0.0);
      report.bounds = {*lo, *hi};
      break;
    case BoundsMethod::kDiagonalDominance: {
      report.alias_norms = AliasNormsOfExpanded(expanded);
      double lower = std::numeric_limits<double>::infinity();
      double upper = 0.0;
      for (std::size_t j = 0; j < bank.length(); ++j) {
        lower = std::min(lower, report.frequency_response[j] - report.alias_norms[j]);
        upper = std::max(upper, report.frequency_response[j] + report.alias_norms[j]);
      }
      report.bounds = {std::max(0.0, lower), upper};
      break;
    }
    case BoundsMethod::kDenseEigen: {
      if (bank.length() > dense_ceiling) {
        throw Error(ErrorCode::kUnsupported,
                    "dense-eigen bounds refused for L=" +
                        std::to_string(bank.length()) + " (ceiling " +
                        std::to_string(dense_ceiling) + ")");
      }
      report.alias_norms = AliasNormsOfExpanded(expanded);
      report.bounds = AtomSystem(bank).Bounds();
      break;
    }
  }
  return report;
}

ComplexVector WalnutApply(const FilterBank& bank, std::span<const Complex> x) {
  return SpectralFrameOperator(bank).Apply(x);
}

ComplexVector ApplyFrameOperatorByComposition(const FilterBank& bank,
                                              std::span<const Complex> x) {
  return Synthesize(AdjointBank(bank), Analyze(bank, x));
}

FiniteFrame AtomSystem(const FilterBank& bank) {
  const FilterBank expanded = ExpandConjugatePairs(bank);
  const std::size_t length = expanded.length();
  Eigen::MatrixXcd atoms(static_cast<Eigen::Index>(length),
                         static_cast<Eigen::Index>(expanded.CoefficientCount()));
  Eigen::Index column = 0;
  for (std::size_t k = 0; k < expanded.size(); ++k) {
    const ComplexVector impulse = Idft(expanded.filter(k).Dense(length));
    const std::size_t d = expanded.decimation(k);
    for (std::size_t n = 0; n < expanded.subband_length(k); ++n, ++column) {
      for (std::size_t t = 0; t < length; ++t) {
        atoms(static_cast<Eigen::Index>(t), column) =
            std::conj(impulse[(n * d + length - t) % length]);
      }
    }
  }
  return FiniteFrame(std::move(atoms));
}

PRResidual PrResidual(const FilterBank& analysis, const FilterBank& synthesis) {
  if (analysis.length() != synthesis.length() ||
      analysis.size() != synthesis.size() ||
      analysis.decimations() != synthesis.decimations()) {
    throw Error(ErrorCode::kShape,
                "analysis and synthesis banks need matching channels and d_k");
  }
  for (std::size_t k = 0; k < analysis.size(); ++k) {
    if (analysis.conjugate_pair(k) != synthesis.conjugate_pair(k)) {
      throw Error(ErrorCode::kShape, "conjugate-pair layouts differ");
    }
  }
  const FilterBank h = ExpandConjugatePairs(analysis);
  const FilterBank g = ExpandConjugatePairs(synthesis);
  const std::size_t length = h.length();
  const std::size_t common = h.CommonDecimation();

  ComplexVector diagonal(length);
  AccumulateAliasTerm(g, h, false, 0, common, diagonal);

  // argmin_l sum_j |T_0[j] - e^{-2 pi i j l / L}|^2
  //   = argmax_l Re sum_j T_0[j] e^{2 pi i j l / L}
  const ComplexVector correlation = Idft(diagonal);
  std::size_t delay = 0;
  for (std::size_t l = 1; l < length; ++l) {
    if (correlation[l].real() > correlation[delay].real()) delay = l;
  }

  double deviation = 0.0;
  for (std::size_t j = 0; j < length; ++j) {
    const double phase = -2.0 * std::numbers::pi *
                         static_cast<double>((j * delay) % length) /
                         static_cast<double>(length);
    deviation = std::max(deviation, std::abs(diagonal[j] - std::polar(1.0, phase)));
  }
  ComplexVector term(length);
  for (std::size_t n = 1; n < common; ++n) {
    std::fill(term.begin(), term.end(), Complex(0.0));
    AccumulateAliasTerm(g, h, false, n, common, term);
    for (const Complex& v : term) deviation = std::max(deviation, std::abs(v));
  }
  return {delay, deviation};
}

FilterBank EquivalentUniform(const FilterBank& bank) {
  const std::size_t length = bank.length();
  const std::size_t common = bank.CommonDecimation();
  if (common > length || length % common != 0) {
    throw Error(ErrorCode::kUnsupported,
                "lcm of decimation factors does not divide L");
  }
  std::vector<BandFilter> filters;
  std::vector<std::size_t> decimation;
  std::vector<bool> pairs;
  BankInfo info = bank.info();
  info.centers_hz.clear();
  info.dilations_hz.clear();
  for (std::size_t k = 0; k < bank.size(); ++k) {
    const std::size_t d = bank.decimation(k);
    const std::size_t q = common / d;
    const BandFilter& base = bank.filter(k);
    for (std::size_t l = 0; l < q; ++l) {
      // Delay by l d samples: multiply bin j by exp(-2 pi i j l d / L).
      BandFilter delayed = base;
      for (std::size_t i = 0; i < delayed.values.size(); ++i) {
        const std::size_t bin = (base.offset + i) % length;
        const double phase = -2.0 * std::numbers::pi *
                             static_cast<double>((bin * l * d) % length) /
                             static_cast<double>(length);
        delayed.values[i] *= std::polar(1.0, phase);
      }
      filters.push_back(std::move(delayed));
      decimation.push_back(common);
      pairs.push_back(bank.conjugate_pair(k));
      if (k < bank.info().centers_hz.size()) {
        info.centers_hz.push_back(bank.info().centers_hz[k]);
      }
      if (k < bank.info().dilations_hz.size()) {
        info.dilations_hz.push_back(bank.info().dilations_hz[k]);
      }
    }
  }
  return FilterBank(length, bank.sample_rate(), std::move(filters),
                    std::move(decimation), std::move(pairs), std::move(info));
}

std::string FormatReport(const FrameReport& report, const FilterBank& bank) {
  std::ostringstream out;
  out << "method " << BoundsMethodName(report.method) << '\n'
      << "painless " << (report.painless ? "true" : "false") << '\n'
      << "frame " << (report.is_frame() ? "true" : "false") << '\n'
      << "lower_bound " << io::FormatDouble(report.bounds.lower) << '\n'
      << "upper_bound " << io::FormatDouble(report.bounds.upper) << '\n'
      << "condition_number " << io::FormatDouble(report.condition_number()) << '\n'
      << "redundancy " << io::FormatDouble(bank.Redundancy()) << '\n'
      << "channels " << bank.size() << '\n'
      << "length " << bank.length() << '\n';
  return out.str();
}

}  // namespace audlet
