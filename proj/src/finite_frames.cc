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

#include "audlet/finite_frames.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "audlet/error.h"

namespace audlet {
namespace {

// Relative eigenvalue threshold below which the frame operator is treated as
// singular.
constexpr double kRankTolerance = 1e-12;

struct HermitianEigen {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXcd vectors;
};

HermitianEigen Decompose(const Eigen::MatrixXcd& s) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(s);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kInternal, "Hermitian eigendecomposition failed");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

// Applies f(lambda) to S through its eigendecomposition; rejects singular S.
Eigen::MatrixXcd SpectralFunction(const Eigen::MatrixXcd& s,
                                  double (*f)(double)) {
  const HermitianEigen eig = Decompose(s);
  const double top = eig.values.maxCoeff();
  if (!(top > 0.0) || eig.values.minCoeff() <= kRankTolerance * top) {
    throw Error(ErrorCode::kNotAFrame,
                "frame operator is singular: the vectors do not span C^L");
  }
  Eigen::VectorXd mapped = eig.values.unaryExpr(f);
  return eig.vectors * mapped.asDiagonal() * eig.vectors.adjoint();
}

}  // namespace

FiniteFrame::FiniteFrame(Eigen::MatrixXcd vectors) : vectors_(std::move(vectors)) {
  if (vectors_.rows() < 1 || vectors_.cols() < 1) {
    throw Error(ErrorCode::kShape, "a frame needs L >= 1 and N >= 1");
  }
  if (!vectors_.allFinite()) {
    throw Error(ErrorCode::kDomain, "frame vectors must be finite");
  }
}

Eigen::VectorXcd FiniteFrame::Analyze(const Eigen::VectorXcd& x) const {
  if (x.size() != vectors_.rows()) {
    throw Error(ErrorCode::kShape, "analysis input has wrong dimension");
  }
  return vectors_.adjoint() * x;
}

Eigen::VectorXcd FiniteFrame::Synthesize(const Eigen::VectorXcd& c) const {
  if (c.size() != vectors_.cols()) {
    throw Error(ErrorCode::kShape, "coefficient count does not match frame");
  }
  return vectors_ * c;
}

Eigen::MatrixXcd FiniteFrame::FrameOperator() const {
  Eigen::MatrixXcd s = vectors_ * vectors_.adjoint();
  // Exact Hermitian symmetry regardless of the product's rounding.
  return 0.5 * (s + s.adjoint());
}

BoundsEstimate FiniteFrame::Bounds() const {
  const HermitianEigen eig = Decompose(FrameOperator());
  double lower = eig.values.minCoeff();
  const double upper = std::max(0.0, eig.values.maxCoeff());
  if (lower <= kRankTolerance * upper) lower = 0.0;
  return {lower, upper};
}

bool FiniteFrame::IsFrame() const { return Bounds().lower > 0.0; }

bool FiniteFrame::IsRieszBasis() const {
  return vectors_.rows() == vectors_.cols() && IsFrame();
}

FiniteFrame FiniteFrame::CanonicalDual() const {
  const Eigen::MatrixXcd inverse =
      SpectralFunction(FrameOperator(), [](double v) { return 1.0 / v; });
  return FiniteFrame(inverse * vectors_);
}

FiniteFrame FiniteFrame::Parsevalize() const {
  const Eigen::MatrixXcd inverse_root = SpectralFunction(
      FrameOperator(), [](double v) { return 1.0 / std::sqrt(v); });
  return FiniteFrame(inverse_root * vectors_);
}

Eigen::VectorXcd ApplyMultiplier(const Eigen::VectorXd& symbol,
                                 const FiniteFrame& synthesis_frame,
                                 const FiniteFrame& analysis_frame,
                                 const Eigen::VectorXcd& x) {
  if (synthesis_frame.size() != analysis_frame.size() ||
      synthesis_frame.dimension() != analysis_frame.dimension() ||
      static_cast<std::size_t>(symbol.size()) != analysis_frame.size()) {
    throw Error(ErrorCode::kShape, "multiplier symbol and frames disagree");
  }
  if (!symbol.allFinite()) {
    throw Error(ErrorCode::kDomain, "multiplier symbol must be bounded");
  }
  Eigen::VectorXcd coefficients = analysis_frame.Analyze(x);
  coefficients.array() *= symbol.array().cast<Complex>();
  return synthesis_frame.Synthesize(coefficients);
}

GaborSystem GaborFrame(const Eigen::VectorXcd& window, std::size_t time_step,
                       std::size_t channels) {
  const auto length = static_cast<std::size_t>(window.size());
  if (length == 0 || time_step == 0 || channels == 0 ||
      length % time_step != 0) {
    throw Error(ErrorCode::kShape,
                "Gabor system needs a | L and M >= 1 (L=" +
                    std::to_string(length) + ", a=" + std::to_string(time_step) +
                    ", M=" + std::to_string(channels) + ")");
  }
  const std::size_t shifts = length / time_step;
  Eigen::MatrixXcd atoms(static_cast<Eigen::Index>(length),
                         static_cast<Eigen::Index>(shifts * channels));
  for (std::size_t l = 0; l < shifts; ++l) {
    for (std::size_t k = 0; k < channels; ++k) {
      const auto column = static_cast<Eigen::Index>(l * channels + k);
      for (std::size_t t = 0; t < length; ++t) {
        // exp(2 pi i k t / M) with the phase reduced mod M to keep it exact.
        const double phase = 2.0 * std::numbers::pi *
                             static_cast<double>((k * t) % channels) /
                             static_cast<double>(channels);
        const std::size_t source = (t + length - (l * time_step) % length) % length;
        atoms(static_cast<Eigen::Index>(t), column) =
            std::polar(1.0, phase) * window(static_cast<Eigen::Index>(source));
      }
    }
  }
  return {FiniteFrame(std::move(atoms)), time_step > channels};
}

}  // namespace audlet
