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

#include "quditcast/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <numeric>

namespace quditcast {

namespace {

// Flat-index strides of each subsystem (row-major, subsystem 0 most
// significant).
std::vector<long> strides_of(const std::vector<int>& dims) {
  std::vector<long> s(dims.size());
  long acc = 1;
  for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
    s[i] = acc;
    acc *= dims[i];
  }
  return s;
}

}  // namespace

long SubsystemShape::total() const {
  long p = 1;
  for (int d : dims) p *= d;
  return p;
}

void SubsystemShape::validate() const {
  if (dims.empty()) throw ValidationError("SubsystemShape: no subsystems");
  for (int d : dims) {
    if (d < 2) throw ValidationError("SubsystemShape: every dim must be >= 2");
  }
}

void SubsystemShape::require_matches(const Matrix& m) const {
  if (m.rows() != m.cols())
    throw ValidationError("shape check: matrix is not square");
  if (m.rows() != total())
    throw ValidationError("shape check: product of dims " + std::to_string(total()) +
                          " != matrix dimension " + std::to_string(m.rows()));
}

DensityMatrix::DensityMatrix(Matrix m, SubsystemShape s)
    : mat(std::move(m)), shape(std::move(s)) {
  shape.require_matches(mat);
}

void DensityMatrix::require_valid_state(double tol) const {
  if (!is_hermitian(mat, std::max(tol, hermiticity_tol)))
    throw ValidationError("state is not Hermitian within tolerance");
  if (std::abs(mat.trace().real() - 1.0) > tol || std::abs(mat.trace().imag()) > tol)
    throw ValidationError("state trace differs from 1 beyond tolerance");
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(mat), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol)
    throw ValidationError("state has a negative eigenvalue beyond tolerance");
}

Matrix identity(int d) { return Matrix::Identity(d, d); }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Matrix hermitize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

Matrix partial_trace(const Matrix& rho, const SubsystemShape& shape,
                     const std::vector<int>& keep_in) {
  shape.require_matches(rho);
  std::vector<int> keep(keep_in);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) throw ValidationError("partial_trace: empty keep set");
  for (int k : keep) {
    if (k < 0 || k >= shape.parts())
      throw ValidationError("partial_trace: keep index out of range");
  }

  const auto strides = strides_of(shape.dims);
  std::vector<int> traced;
  for (int i = 0; i < shape.parts(); ++i)
    if (!std::binary_search(keep.begin(), keep.end(), i)) traced.push_back(i);

  long dk = 1, dt = 1;
  for (int k : keep) dk *= shape.dims[k];
  for (int t : traced) dt *= shape.dims[t];

  // Offsets of every kept-digit combination and every traced-digit
  // combination in the full flat index.
  std::vector<long> kept_off(dk, 0), traced_off(dt, 0);
  for (long v = 0; v < dk; ++v) {
    long rest = v;
    for (int i = static_cast<int>(keep.size()) - 1; i >= 0; --i) {
      const int sub = keep[i];
      kept_off[v] += (rest % shape.dims[sub]) * strides[sub];
      rest /= shape.dims[sub];
    }
  }
  for (long v = 0; v < dt; ++v) {
    long rest = v;
    for (int i = static_cast<int>(traced.size()) - 1; i >= 0; --i) {
      const int sub = traced[i];
      traced_off[v] += (rest % shape.dims[sub]) * strides[sub];
      rest /= shape.dims[sub];
    }
  }

  Matrix out = Matrix::Zero(dk, dk);
  for (long r = 0; r < dk; ++r)
    for (long c = 0; c < dk; ++c) {
      Complex sum(0, 0);
      for (long t = 0; t < dt; ++t)
        sum += rho(kept_off[r] + traced_off[t], kept_off[c] + traced_off[t]);
      out(r, c) = sum;
    }
  return out;
}

Matrix partial_transpose(const Matrix& rho, const SubsystemShape& shape, int which) {
  shape.require_matches(rho);
  if (which < 0 || which >= shape.parts())
    throw ValidationError("partial_transpose: subsystem index out of range");

  const auto strides = strides_of(shape.dims);
  const long n = shape.total();
  const long stride = strides[which];
  const int d = shape.dims[which];

  std::vector<int> digit(n);
  for (long i = 0; i < n; ++i) digit[i] = static_cast<int>((i / stride) % d);

  Matrix out(n, n);
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c) {
      const long rr = r + static_cast<long>(digit[c] - digit[r]) * stride;
      const long cc = c + static_cast<long>(digit[r] - digit[c]) * stride;
      out(rr, cc) = rho(r, c);
    }
  return out;
}

Matrix permute_subsystems(const Matrix& rho, const SubsystemShape& shape,
                          const std::vector<int>& perm) {
  shape.require_matches(rho);
  const int n = shape.parts();
  if (static_cast<int>(perm.size()) != n)
    throw ValidationError("permute_subsystems: permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p])
      throw ValidationError("permute_subsystems: not a permutation");
    seen[p] = true;
  }

  const auto old_strides = strides_of(shape.dims);
  std::vector<int> new_dims(n);
  for (int k = 0; k < n; ++k) new_dims[k] = shape.dims[perm[k]];
  const auto new_strides = strides_of(new_dims);

  // new flat index as a function of the old one
  const long total = shape.total();
  std::vector<long> map(total, 0);
  for (long i = 0; i < total; ++i) {
    long v = 0;
    for (int k = 0; k < n; ++k) {
      const int digit = static_cast<int>((i / old_strides[perm[k]]) % shape.dims[perm[k]]);
      v += digit * new_strides[k];
    }
    map[i] = v;
  }

  Matrix out(total, total);
  for (long r = 0; r < total; ++r)
    for (long c = 0; c < total; ++c) out(map[r], map[c]) = rho(r, c);
  return out;
}

EigResult eig_hermitian(const Matrix& m) {
  if (!is_hermitian(m))
    throw ValidationError("eig_hermitian: input is not Hermitian within 1e-12");
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(m));
  if (es.info() != Eigen::Success)
    throw NumericsError("eig_hermitian: eigensolver failed to converge");
  const Eigen::Index n = m.rows();
  EigResult out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {          // ascending -> descending
    out.values(i) = es.eigenvalues()(n - 1 - i);
    out.vectors.col(i) = es.eigenvectors().col(n - 1 - i);
  }
  return out;
}

double trace_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

double ky_fan_norm(const Matrix& m) { return trace_norm(m); }

Matrix realign(const Matrix& rho, const SubsystemShape& shape) {
  if (shape.parts() != 2)
    throw ValidationError("realign: shape must be bipartite");
  shape.require_matches(rho);
  const int m = shape.dims[0], n = shape.dims[1];
  Matrix out(m * m, n * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          out(i * m + j, k * n + l) = rho(i * n + k, j * n + l);
  return out;
}

Matrix realign_inverse(const Matrix& r, const SubsystemShape& shape) {
  if (shape.parts() != 2)
    throw ValidationError("realign_inverse: shape must be bipartite");
  const int m = shape.dims[0], n = shape.dims[1];
  if (r.rows() != static_cast<long>(m) * m || r.cols() != static_cast<long>(n) * n)
    throw ValidationError("realign_inverse: matrix is not m^2 x n^2 for the given shape");
  Matrix out(m * n, m * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          out(i * n + k, j * n + l) = r(i * m + j, k * n + l);
  return out;
}

}  // namespace quditcast
