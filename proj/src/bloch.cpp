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

#include "quditcast/bloch.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace quditcast {

namespace {

std::vector<Matrix> pauli_matrices() {
  Matrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, Complex(0, -1), Complex(0, 1), 0;
  sz << 1, 0, 0, -1;
  return {sx, sy, sz};
}

// Standard ordering for d=3: the symmetric/antisymmetric/diagonal members
// interleaved as G1..G8 (01-pair, diag(1,-1,0), 02-pair, 12-pair, then the
// final diagonal); the paper-facing tuple positions (y3, y8, t14, ...)
// depend on exactly this order.
std::vector<Matrix> gell_mann3() {
  std::vector<Matrix> g(8, Matrix::Zero(3, 3));
  g[0](0, 1) = 1;
  g[0](1, 0) = 1;
  g[1](0, 1) = Complex(0, -1);
  g[1](1, 0) = Complex(0, 1);
  g[2](0, 0) = 1;
  g[2](1, 1) = -1;
  g[3](0, 2) = 1;
  g[3](2, 0) = 1;
  g[4](0, 2) = Complex(0, -1);
  g[4](2, 0) = Complex(0, 1);
  g[5](1, 2) = 1;
  g[5](2, 1) = 1;
  g[6](1, 2) = Complex(0, -1);
  g[6](2, 1) = Complex(0, 1);
  const double s = 1.0 / std::sqrt(3.0);
  g[7](0, 0) = s;
  g[7](1, 1) = s;
  g[7](2, 2) = -2 * s;
  return g;
}

// Generalized Gell-Mann for d > 3: all symmetric pair operators first
// (pairs in lexicographic order), then all antisymmetric, then the d-1
// diagonal operators. Tr(O_i O_j) = 2 delta_ij throughout.
std::vector<Matrix> gell_mann_general(int d) {
  std::vector<Matrix> ops;
  ops.reserve(static_cast<size_t>(d) * d - 1);
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      Matrix m = Matrix::Zero(d, d);
      m(j, k) = 1;
      m(k, j) = 1;
      ops.push_back(m);
    }
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      Matrix m = Matrix::Zero(d, d);
      m(j, k) = Complex(0, -1);
      m(k, j) = Complex(0, 1);
      ops.push_back(m);
    }
  for (int l = 1; l < d; ++l) {
    Matrix m = Matrix::Zero(d, d);
    const double s = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
    for (int j = 0; j < l; ++j) m(j, j) = s;
    m(l, l) = -l * s;
    ops.push_back(m);
  }
  return ops;
}

}  // namespace

const OperatorBasis& standard_basis(int d) {
  if (d < 2) throw ValidationError("standard_basis: dimension must be >= 2");
  static std::mutex mutex;
  static std::map<int, OperatorBasis> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) {
    OperatorBasis basis;
    basis.dim = d;
    basis.normalization = 2.0;
    if (d == 2)
      basis.ops = pauli_matrices();
    else if (d == 3)
      basis.ops = gell_mann3();
    else
      basis.ops = gell_mann_general(d);
    it = cache.emplace(d, std::move(basis)).first;
  }
  return it->second;
}

BlochRep BlochRep::zero(int d) {
  BlochRep b;
  b.d = d;
  b.X.setZero();
  b.Y = Eigen::VectorXd::Zero(static_cast<long>(d) * d - 1);
  b.T = Eigen::MatrixXd::Zero(3, static_cast<long>(d) * d - 1);
  return b;
}

BlochRep decompose(const DensityMatrix& rho) {
  if (rho.shape.parts() != 2 || rho.shape.dims[0] != 2)
    throw ValidationError("decompose: state must be bipartite with a qubit first factor");
  const int d = rho.shape.dims[1];
  const auto& pauli = standard_basis(2).ops;
  const auto& qudit = standard_basis(d).ops;

  // Tr[rho (A (x) B)] without forming the Kronecker product:
  // sum_{a,b,m,n} rho((a,m),(b,n)) A(b,a) B(n,m).
  auto expect = [&](const Matrix* a, const Matrix* b) {
    Complex sum(0, 0);
    for (int aa = 0; aa < 2; ++aa)
      for (int bb = 0; bb < 2; ++bb) {
        const Complex av = a ? (*a)(bb, aa) : (aa == bb ? Complex(1, 0) : Complex(0, 0));
        if (av == Complex(0, 0)) continue;
        for (int m = 0; m < d; ++m)
          for (int n = 0; n < d; ++n) {
            const Complex bv = b ? (*b)(n, m) : (m == n ? Complex(1, 0) : Complex(0, 0));
            if (bv == Complex(0, 0)) continue;
            sum += rho.mat(aa * d + m, bb * d + n) * av * bv;
          }
      }
    return sum.real();
  };

  BlochRep b = BlochRep::zero(d);
  for (int i = 0; i < 3; ++i) b.X(i) = expect(&pauli[i], nullptr);
  for (size_t j = 0; j < qudit.size(); ++j) b.Y(j) = expect(nullptr, &qudit[j]);
  for (int i = 0; i < 3; ++i)
    for (size_t j = 0; j < qudit.size(); ++j) b.T(i, j) = expect(&pauli[i], &qudit[j]);
  return b;
}

DensityMatrix reconstruct(const BlochRep& b) {
  if (b.d < 2) throw ValidationError("reconstruct: invalid qudit dimension");
  const long k = static_cast<long>(b.d) * b.d - 1;
  if (b.Y.size() != k || b.T.rows() != 3 || b.T.cols() != k)
    throw ValidationError("reconstruct: component sizes inconsistent with d");

  const auto& pauli = standard_basis(2).ops;
  const auto& basis = standard_basis(b.d);
  const double c = basis.normalization;
  const int n = 2 * b.d;

  // Orthogonal projection: coefficient of sigma_i (x) I is X_i / (2d),
  // of I (x) O_j is Y_j / (2c), of sigma_i (x) O_j is T_ij / (2c).
  Matrix rho = Matrix::Identity(n, n) / static_cast<double>(n);
  for (int i = 0; i < 3; ++i)
    rho += (b.X(i) / n) * kron(pauli[i], identity(b.d));
  for (long j = 0; j < k; ++j)
    rho += (b.Y(j) / (2 * c)) * kron(identity(2), basis.ops[j]);
  for (int i = 0; i < 3; ++i)
    for (long j = 0; j < k; ++j) {
      if (b.T(i, j) == 0.0) continue;
      rho += (b.T(i, j) / (2 * c)) * kron(pauli[i], basis.ops[j]);
    }
  return {std::move(rho), SubsystemShape{2, b.d}};
}

}  // namespace quditcast
