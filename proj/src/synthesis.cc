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

#include "audlet/synthesis.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "audlet/dsp.h"
#include "audlet/error.h"
#include "audlet/frame_diagnostics.h"
#include "audlet/io/number_format.h"
#include "audlet/simd/kernels.h"

namespace audlet {
namespace {

// H_0 must be strictly positive for a frame; a relative floor catches bins
// that only hold rounding noise.
bool HasSpectralGap(const RealVector& response) {
  const double top = *std::max_element(response.begin(), response.end());
  const double bottom = *std::min_element(response.begin(), response.end());
  return !(top > 0.0) || bottom <= 1e-14 * top;
}

FilterBank ScaleByResponse(const FilterBank& bank, bool conjugate,
                           double exponent) {
  if (!IsPainless(bank)) {
    throw Error(ErrorCode::kUnsupported,
                "closed-form dual needs a painless bank; use cg or neumann");
  }
  const RealVector response = FrequencyResponse(bank);
  if (HasSpectralGap(response)) {
    throw Error(ErrorCode::kNotAFrame,
                "frequency response vanishes: the bank is not a frame");
  }
  const std::size_t length = bank.length();
  std::vector<BandFilter> filters = bank.filters();
  for (BandFilter& f : filters) {
    for (std::size_t i = 0; i < f.values.size(); ++i) {
      const double h0 = response[(f.offset + i) % length];
      const Complex v = conjugate ? std::conj(f.values[i]) : f.values[i];
      f.values[i] = v / std::pow(h0, exponent);
    }
  }
  return bank.WithFilters(std::move(filters));
}

double RelativeTo(double value, double reference) {
  return reference > 0.0 ? value / reference : value;
}

}  // namespace

FilterBank PainlessDual(const FilterBank& bank) {
  return ScaleByResponse(bank, true, 1.0);
}

FilterBank NormalizeToParseval(const FilterBank& bank) {
  return ScaleByResponse(bank, false, 0.5);
}

IterativeResult CgSynthesize(const FilterBank& bank,
                             const SubbandCoefficients& coefficients,
                             const CgConfig& config) {
  if (!(config.tolerance > 0.0)) {
    throw Error(ErrorCode::kDomain, "CG tolerance must be positive");
  }
  CheckCoefficients(bank, coefficients);
  const std::size_t length = bank.length();
  const std::size_t budget =
      config.max_iterations == 0 ? length : config.max_iterations;

  IterativeResult result;
  const ComplexVector rhs = Dft(Synthesize(AdjointBank(bank), coefficients));
  const double rhs_norm = Norm(rhs);
  if (rhs_norm == 0.0) {
    result.signal.assign(length, Complex(0.0));
    return result;
  }

  const SpectralFrameOperator op(bank);
  const RealVector& response = op.frequency_response();
  if (HasSpectralGap(response)) {
    throw ConvergenceError("frame operator is singular (H_0 vanishes)", {});
  }
  const auto& kernels = simd::Kernels();
  auto precondition = [&](const ComplexVector& r) {
    ComplexVector z(r);
    if (config.preconditioned) {
      for (std::size_t j = 0; j < length; ++j) z[j] /= response[j];
    }
    return z;
  };

  ComplexVector x(length);
  ComplexVector r = rhs;
  ComplexVector z = precondition(r);
  ComplexVector p = z;
  double rz = kernels.dot(r.data(), z.data(), length).real();
  while (result.iterations < budget) {
    const ComplexVector q = op.ApplySpectrum(p);
    const double curvature = kernels.dot(p.data(), q.data(), length).real();
    if (!(curvature > 0.0)) {
      throw ConvergenceError("CG breakdown: frame operator not positive",
                             result.trace);
    }
    const Complex alpha(rz / curvature, 0.0);
    kernels.axpy(x.data(), alpha, p.data(), length);
    kernels.axpy(r.data(), -alpha, q.data(), length);
    ++result.iterations;
    const double residual = Norm(r) / rhs_norm;
    result.trace.push_back(residual);
    if (config.observer) config.observer(Idft(x));
    if (residual <= config.tolerance) {
      result.signal = Idft(x);
      return result;
    }
    z = precondition(r);
    const double rz_next = kernels.dot(r.data(), z.data(), length).real();
    const double beta = rz_next / rz;
    rz = rz_next;
    for (std::size_t j = 0; j < length; ++j) p[j] = z[j] + beta * p[j];
  }
  throw ConvergenceError(
      "CG did not reach relative residual " +
          io::FormatDouble(config.tolerance) + " in " +
          std::to_string(budget) + " iterations",
      result.trace);
}

IterativeResult NeumannSynthesize(const FilterBank& bank,
                                  const SubbandCoefficients& coefficients,
                                  const BoundsEstimate& bounds,
                                  const NeumannConfig& config) {
  if (!(bounds.lower > 0.0) || !(bounds.upper >= bounds.lower)) {
    throw Error(ErrorCode::kNotAFrame,
                "Neumann iteration needs frame bounds 0 < A <= B");
  }
  if (!(config.tolerance > 0.0)) {
    throw Error(ErrorCode::kDomain, "Neumann tolerance must be positive");
  }
  CheckCoefficients(bank, coefficients);
  const std::size_t length = bank.length();
  const auto& kernels = simd::Kernels();
  const Complex step(2.0 / (bounds.lower + bounds.upper), 0.0);

  IterativeResult result;
  const ComplexVector rhs = Dft(Synthesize(AdjointBank(bank), coefficients));
  const double rhs_norm = Norm(rhs);
  const SpectralFrameOperator op(bank);

  ComplexVector x(length);
  ComplexVector r = rhs;
  double x_norm = 0.0;
  while (true) {
    // The update is step * r; stop before applying a negligible one.
    const double update_norm = std::abs(step) * Norm(r);
    if (update_norm <= config.tolerance * x_norm || update_norm == 0.0) break;
    if (result.iterations == config.max_iterations) {
      throw ConvergenceError("Neumann iteration did not converge in " +
                                 std::to_string(config.max_iterations) +
                                 " iterations",
                             result.trace);
    }
    kernels.axpy(x.data(), step, r.data(), length);
    x_norm = Norm(x);
    ++result.iterations;
    const ComplexVector sx = op.ApplySpectrum(x);
    for (std::size_t j = 0; j < length; ++j) r[j] = rhs[j] - sx[j];
    result.trace.push_back(RelativeTo(Norm(r), rhs_norm));
    if (config.observer) config.observer(Idft(x));
  }
  result.signal = Idft(x);
  return result;
}

std::string FormatTrace(const std::vector<double>& trace) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    out << (i + 1) << ' ' << io::FormatDouble(trace[i]) << '\n';
  }
  return out.str();
}

}  // namespace audlet
