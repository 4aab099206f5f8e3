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

#include "quditcast/linalg.hpp"

// Bloch representation of qubit-qudit (2 x d) states.
//
// Convention: the X, Y, T components are raw expectation values
//   X_i = Tr[rho (sigma_i (x) I_d)]
//   Y_j = Tr[rho (I_2 (x) O_j)]
//   T_ij = Tr[rho (sigma_i (x) O_j)]
// against the Pauli matrices and the (generalized) Gell-Mann basis with
// Tr(O_i O_j) = 2 delta_ij. reconstruct() inverts decompose() exactly by
// orthogonal projection; positivity is not checked there. Some criteria
// consume the canonical-form *coefficients* instead, which for a 2 x d
// state are (X, (d/2) Y, (d/2) T); that scaling is applied inside those
// criteria, never stored here.

namespace quditcast {

struct OperatorBasis {
  int dim = 0;
  std::vector<Matrix> ops;     // d^2 - 1 traceless Hermitian matrices
  double normalization = 2.0;  // c with Tr(O_i O_j) = c delta_ij
};

// Pauli for d=2, the eight standard Gell-Mann matrices for d=3, and the
// generalized Gell-Mann construction (symmetric family, then antisymmetric,
// then diagonal) for d > 3. Cached per dimension; the returned reference
// stays valid for the program lifetime.
const OperatorBasis& standard_basis(int d);

struct BlochRep {
  int d = 0;               // qudit dimension (qubit side is always first)
  Eigen::Vector3d X;       // qubit Bloch vector
  Eigen::VectorXd Y;       // qudit Bloch vector, d^2 - 1 entries
  Eigen::MatrixXd T;       // correlation matrix, 3 x (d^2 - 1)

  static BlochRep zero(int d);
};

BlochRep decompose(const DensityMatrix& rho);
DensityMatrix reconstruct(const BlochRep& b);

}  // namespace quditcast
