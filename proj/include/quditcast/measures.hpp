// Copyright 2026 The quditcast Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "quditcast/bloch.hpp"
#include "quditcast/linalg.hpp"

namespace quditcast {

enum class MeasureKind { GeometricDiscord, L1Coherence };

struct MeasureValue {
  MeasureKind kind;
  double value = 0.0;
  std::string basis_note;  // basis identifier for coherence
};

// Geometric discord of a 2 x d state:
//   D_G = (1/2d) (|x|^2 + |T'|_F^2 - lambda_max(x x^t + T' T'^t)),
// with x the qubit Bloch vector and T' = (d/2) T the correlation matrix in
// canonical-form coefficients (the scaling that makes the closed forms
// D_G(rho_13) = 1/18 and D_G = 25 r^2/192 come out of the protocol; for
// d = 2 it is the identity). Negative values within 1e-9 are clamped to
// zero; anything more negative raises NumericsError.
MeasureValue geometric_discord(const DensityMatrix& rho);

// l1-norm coherence: sum of |off-diagonal| entries in the computational
// product basis.
MeasureValue l1_coherence(const DensityMatrix& rho);

// Closed form for the coherence of Alice's local broadcast output in terms
// of the input qubit Bloch vector: 1/3 + (4/3) sqrt(x1^2 + x2^2).
double alice_local_coherence_formula(const Eigen::Vector3d& x);

}  // namespace quditcast
