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

#include "quditcast/cloning.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace quditcast {

namespace {

// Reduced outputs of the (linear) protocol, no input validation. Shared by
// the public broadcast() and the channel builder, which feeds matrix units
// through it.
void broadcast_core(const Matrix& rho12, int d, Matrix& r13, Matrix& r24,
                    Matrix& r14, Matrix& r23) {
  const Matrix& va = heisenberg_isometry(2).V;
  const Matrix& vb = heisenberg_isometry(d).V;
  const Matrix w = kron(va, vb);        // (8 d^3) x (2d)
  Matrix big = w * rho12 * w.adjoint();  // order (1,3,5) x (2,4,6)

  const SubsystemShape pre{2, 2, 2, d, d, d};
  big = permute_subsystems(big, pre, {0, 3, 1, 4, 2, 5});  // -> (1,2,3,4,5,6)

  const SubsystemShape six{2, d, 2, d, 2, d};
  const Matrix r1234 = partial_trace(big, six, {0, 1, 2, 3});  // drop machines

  const SubsystemShape four{2, d, 2, d};
  r13 = partial_trace(r1234, four, {0, 2});
  r24 = partial_trace(r1234, four, {1, 3});
  r14 = partial_trace(r1234, four, {0, 3});
  // keeping {2,3} yields the pair in order (qudit 2, qubit 3); swap so the
  // qubit clone comes first like every other 2 x d state here
  r23 = permute_subsystems(partial_trace(r1234, four, {1, 2}),
                           SubsystemShape{d, 2}, {1, 0});
}

int require_qubit_qudit(const DensityMatrix& rho) {
  if (rho.shape.parts() != 2 || rho.shape.dims[0] != 2)
    throw ValidationError("broadcast: input must be a 2 x d state");
  return rho.shape.dims[1];
}

}  // namespace

const CloningIsometry& heisenberg_isometry(int d) {
  if (d < 2) throw ValidationError("heisenberg_isometry: dimension must be >= 2");
  static std::mutex mutex;
  static std::map<int, CloningIsometry> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) {
    CloningIsometry iso;
    iso.d = d;
    iso.V = Matrix::Zero(static_cast<long>(d) * d * d, d);
    const double amp = std::sqrt(2.0 / (d + 1));
    auto idx = [d](int a, int b, int c) { return (static_cast<long>(a) * d + b) * d + c; };
    for (int j = 0; j < d; ++j) {
      iso.V(idx(j, j, j), j) += amp;
      for (int r = 1; r < d; ++r) {
        const int jr = (j + r) % d;
        iso.V(idx(j, jr, jr), j) += amp / 2;   // copy stays on clone a
        iso.V(idx(jr, j, jr), j) += amp / 2;   // copy stays on clone b
      }
    }
    it = cache.emplace(d, std::move(iso)).first;
  }
  return it->second;
}

BroadcastOutputs broadcast(const DensityMatrix& rho12) {
  const int d = require_qubit_qudit(rho12);
  if (!is_hermitian(rho12.mat, 1e-10))
    throw ValidationError("broadcast: input is not Hermitian");
  if (std::abs(rho12.mat.trace().real() - 1.0) > 1e-10)
    throw ValidationError("broadcast: input trace differs from 1");

  Matrix r13, r24, r14, r23;
  broadcast_core(rho12.mat, d, r13, r24, r14, r23);
  return {{std::move(r13), SubsystemShape{2, 2}},
          {std::move(r24), SubsystemShape{d, d}},
          {std::move(r14), SubsystemShape{2, d}},
          {std::move(r23), SubsystemShape{2, d}}};
}

double qudit_shrink_factor(int d) {
  if (d < 2) throw ValidationError("qudit_shrink_factor: dimension must be >= 2");
  static std::mutex mutex;
  static std::map<int, double> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) {
    // Probe with two different qudit-side Bloch components; both must give
    // the same ratio or the calibration is rejected.
    const auto& basis = standard_basis(d).ops;
    double factors[2];
    const size_t probes[2] = {0, basis.size() - 1};
    for (int p = 0; p < 2; ++p) {
      const double eps = 0.05;
      BlochRep in = BlochRep::zero(d);
      in.Y(probes[p]) = eps;
      const DensityMatrix rho = reconstruct(in);
      Matrix r13, r24, r14, r23;
      broadcast_core(rho.mat, d, r13, r24, r14, r23);
      const BlochRep out = decompose(DensityMatrix{r14, SubsystemShape{2, d}});
      factors[p] = out.Y(probes[p]) / eps;
    }
    if (std::abs(factors[0] - factors[1]) > 1e-12)
      throw NumericsError("qudit_shrink_factor: probe components disagree");
    it = cache.emplace(d, 0.5 * (factors[0] + factors[1])).first;
  }
  return it->second;
}

BlochRep nonlocal_output_fast(const BlochRep& b) {
  const double sa = 2.0 / 3.0;
  const double sb = qudit_shrink_factor(b.d);
  BlochRep out = b;
  out.X *= sa;
  out.Y *= sb;
  out.T *= sa * sb;
  return out;
}

BroadcastChannel::BroadcastChannel(int d) : d_(d) {
  const int n = 2 * d;
  s13_.resize(16, static_cast<long>(n) * n);
  s24_.resize(static_cast<long>(d) * d * d * d, static_cast<long>(n) * n);
  s14_.resize(static_cast<long>(n) * n, static_cast<long>(n) * n);
  s23_.resize(static_cast<long>(n) * n, static_cast<long>(n) * n);
  Matrix unit = Matrix::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      unit(a, b) = 1;
      Matrix r13, r24, r14, r23;
      broadcast_core(unit, d, r13, r24, r14, r23);
      unit(a, b) = 0;
      const long col = static_cast<long>(a) * n + b;
      s13_.col(col) = r13.reshaped<Eigen::RowMajor>();
      s24_.col(col) = r24.reshaped<Eigen::RowMajor>();
      s14_.col(col) = r14.reshaped<Eigen::RowMajor>();
      s23_.col(col) = r23.reshaped<Eigen::RowMajor>();
    }
}

BroadcastOutputs BroadcastChannel::apply(const DensityMatrix& rho12) const {
  const int d = require_qubit_qudit(rho12);
  if (d != d_) throw ValidationError("BroadcastChannel: dimension mismatch");
  const Eigen::VectorXcd v = rho12.mat.reshaped<Eigen::RowMajor>();
  auto unvec = [](const Eigen::VectorXcd& w, int rows) {
    return Matrix(w.reshaped<Eigen::RowMajor>(rows, w.size() / rows));
  };
  return {{unvec(s13_ * v, 2 * 2), SubsystemShape{2, 2}},
          {unvec(s24_ * v, d * d), SubsystemShape{d, d}},
          {unvec(s14_ * v, 2 * d), SubsystemShape{2, d}},
          {unvec(s23_ * v, 2 * d), SubsystemShape{2, d}}};
}

const BroadcastChannel& broadcast_channel(int d) {
  static std::mutex mutex;
  static std::map<int, BroadcastChannel> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, BroadcastChannel(d)).first;
  return it->second;
}

}  // namespace quditcast
