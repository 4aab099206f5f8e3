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

#include <Eigen/Dense>
#include <Eigen/QR>

#include "quditcast/families.hpp"
#include "quditcast/linalg.hpp"

namespace qtest {

using namespace quditcast;

inline Matrix ginibre(int rows, int cols, std::uint64_t seed) {
  GaussianStream rng(seed);
  Matrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = rng.cgaussian();
  return g;
}

inline Eigen::VectorXcd random_ket(int d, std::uint64_t seed) {
  GaussianStream rng(seed);
  Eigen::VectorXcd psi(d);
  for (int i = 0; i < d; ++i) psi(i) = rng.cgaussian();
  psi.normalize();
  return psi;
}

// Haar-induced random state annotated as 2 x d.
inline DensityMatrix random_2xd(int d, int env, std::uint64_t seed) {
  return haar_random_state(2 * d, env, seed).with_shape(SubsystemShape{2, d});
}

inline Matrix haar_unitary(int n, std::uint64_t seed) {
  const Matrix g = ginibre(n, n, seed);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
  return q;
}

inline Matrix pauli(int i) {
  Matrix m(2, 2);
  if (i == 0)
    m << 0, 1, 1, 0;
  else if (i == 1)
    m << 0, Complex(0, -1), Complex(0, 1), 0;
  else
    m << 1, 0, 0, -1;
  return m;
}

// |phi+><phi+| for two qubits, phi+ = (|00> + |11>)/sqrt(2)
inline Matrix bell22() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  v(0) = v(3) = 1 / std::sqrt(2.0);
  return v * v.adjoint();
}

inline double maxdiff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace qtest
