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

#include "audlet/dsp.h"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "audlet/error.h"
#include "audlet/simd/kernels.h"

namespace audlet {
namespace {

// FFTW planning is not thread-safe and plans are reusable for any unaligned
// buffer of the planned size, so plans are created once per (size, sign)
// under a lock and executed with the new-array interface.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan Get(std::size_t n, int sign) {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto key = std::make_pair(n, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    ComplexVector scratch(n);
    auto* buffer = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan =
        fftw_plan_dft_1d(static_cast<int>(n), buffer, buffer, sign,
                         FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan == nullptr) {
      throw Error(ErrorCode::kInternal,
                  "FFT planning failed for size " + std::to_string(n));
    }
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& Plans() {
  static PlanCache cache;
  return cache;
}

void Transform(std::span<Complex> data, int sign) {
  if (data.empty()) {
    throw Error(ErrorCode::kShape, "cannot transform an empty sequence");
  }
  if (data.size() == 1) return;
  fftw_plan plan = Plans().Get(data.size(), sign);
  auto* buffer = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, buffer, buffer);
}

}  // namespace

double Norm(std::span<const Complex> x) {
  const Complex sq = simd::Kernels().dot(x.data(), x.data(), x.size());
  return std::sqrt(sq.real());
}

double RelativeError(std::span<const Complex> estimate,
                     std::span<const Complex> reference) {
  if (estimate.size() != reference.size()) {
    throw Error(ErrorCode::kShape, "relative error of unequal lengths");
  }
  double diff = 0.0, ref = 0.0;
  for (std::size_t i = 0; i < estimate.size(); ++i) {
    diff += std::norm(estimate[i] - reference[i]);
    ref += std::norm(reference[i]);
  }
  if (ref == 0.0) return std::sqrt(diff);
  return std::sqrt(diff / ref);
}

void CheckSignal(std::span<const Complex> x, const char* what) {
  if (x.empty()) {
    throw Error(ErrorCode::kShape, std::string(what) + " is empty");
  }
  for (const Complex& v : x) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorCode::kDomain,
                  std::string(what) + " contains non-finite samples");
    }
  }
}

void DftInPlace(std::span<Complex> data) { Transform(data, FFTW_FORWARD); }

void IdftInPlace(std::span<Complex> data) {
  Transform(data, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(data.size());
  for (Complex& v : data) v *= scale;
}

ComplexVector Dft(std::span<const Complex> x) {
  CheckSignal(x, "DFT input");
  ComplexVector out(x.begin(), x.end());
  DftInPlace(out);
  return out;
}

ComplexVector Idft(std::span<const Complex> spectrum) {
  CheckSignal(spectrum, "inverse DFT input");
  ComplexVector out(spectrum.begin(), spectrum.end());
  IdftInPlace(out);
  return out;
}

ComplexVector Downsample(std::span<const Complex> x, std::size_t factor) {
  if (factor == 0 || x.empty() || x.size() % factor != 0) {
    throw Error(ErrorCode::kShape,
                "downsampling factor " + std::to_string(factor) +
                    " does not divide length " + std::to_string(x.size()));
  }
  ComplexVector out(x.size() / factor);
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = x[n * factor];
  return out;
}

ComplexVector Upsample(std::span<const Complex> x, std::size_t factor) {
  if (factor == 0 || x.empty()) {
    throw Error(ErrorCode::kShape, "upsampling needs factor >= 1 and data");
  }
  ComplexVector out(x.size() * factor);
  for (std::size_t n = 0; n < x.size(); ++n) out[n * factor] = x[n];
  return out;
}

ComplexVector CircularConvolve(std::span<const Complex> x,
                               std::span<const Complex> h) {
  if (x.size() != h.size()) {
    throw Error(ErrorCode::kShape, "circular convolution needs equal lengths");
  }
  ComplexVector xs = Dft(x);
  const ComplexVector hs = Dft(h);
  ComplexVector out(xs.size());
  simd::Kernels().mul_acc(out.data(), xs.data(), hs.data(), xs.size());
  IdftInPlace(out);
  return out;
}

}  // namespace audlet
