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

// Dense frames in C^L.
//
// A FiniteFrame stores its N vectors as the columns of an L x N matrix, so
// the synthesis operator is the matrix itself and the analysis operator its
// conjugate transpose. Inner products are conjugate-linear in the second
// argument: analysis coefficient k of x is <x, phi_k> = phi_k^H x.
//
// These routines are O(L^3) and meant for desk-scale problems and as the
// exact reference for the filter bank diagnostics.

#ifndef AUDLET_FINITE_FRAMES_H_
#define AUDLET_FINITE_FRAMES_H_

#include <Eigen/Dense>
#include <cstddef>

#include "audlet/types.h"

namespace audlet {

class FiniteFrame {
 public:
  // Columns are the frame vectors. Requires at least one row and column.
  explicit FiniteFrame(Eigen::MatrixXcd vectors);

  std::size_t dimension() const { return static_cast<std::size_t>(vectors_.rows()); }
  std::size_t size() const { return static_cast<std::size_t>(vectors_.cols()); }
  const Eigen::MatrixXcd& vectors() const { return vectors_; }
  Eigen::VectorXcd vector(std::size_t k) const { return vectors_.col(static_cast<Eigen::Index>(k)); }

  // (<x, phi_k>)_k
  Eigen::VectorXcd Analyze(const Eigen::VectorXcd& x) const;
  // sum_k c_k phi_k
  Eigen::VectorXcd Synthesize(const Eigen::VectorXcd& c) const;
  // S = D C, Hermitian positive semidefinite L x L.
  Eigen::MatrixXcd FrameOperator() const;

  // Optimal bounds: extreme eigenvalues of S. lower == 0 means "not a frame"
  // (eigenvalues below 1e-12 * max are clamped to zero).
  BoundsEstimate Bounds() const;

  // Rank-based frame test: rank(vectors) == L.
  bool IsFrame() const;
  // N == L and the vectors are linearly independent.
  bool IsRieszBasis() const;

  // (S^-1 phi_k)_k. Throws Error(kNotAFrame) for rank-deficient systems.
  FiniteFrame CanonicalDual() const;
  // (S^-1/2 phi_k)_k, a Parseval frame. Throws Error(kNotAFrame).
  FiniteFrame Parsevalize() const;

 private:
  Eigen::MatrixXcd vectors_;
};

// M x = sum_k m_k <x, psi_k> phi_k. Phi and Psi must have equal size and
// dimension, m must have N entries.
Eigen::VectorXcd ApplyMultiplier(const Eigen::VectorXd& symbol,
                                 const FiniteFrame& synthesis_frame,
                                 const FiniteFrame& analysis_frame,
                                 const Eigen::VectorXcd& x);

struct GaborSystem {
  FiniteFrame frame;
  // a / M > 1: the system is undersampled and cannot be a frame.
  bool density_warning = false;
};

// Discrete Gabor system (exp(2 pi i k t / M) g[t - l a]) ordered (l, k), i.e.
// column l * M + k. Requires a | L and M >= 1.
GaborSystem GaborFrame(const Eigen::VectorXcd& window, std::size_t time_step,
                       std::size_t channels);

}  // namespace audlet

#endif  // AUDLET_FINITE_FRAMES_H_
