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

#include "quditcast/criteria.hpp"

#include <algorithm>
#include <cmath>

namespace quditcast {

const char* to_string(Status s) {
  switch (s) {
    case Status::Separable: return "Separable";
    case Status::Entangled: return "Entangled";
    case Status::Indeterminate: return "Indeterminate";
  }
  return "?";
}

namespace {

void require_bipartite(const DensityMatrix& rho, const char* who) {
  if (rho.shape.parts() != 2)
    throw ValidationError(std::string(who) + ": state must be bipartite");
  rho.shape.require_matches(rho.mat);
}

bool ppt_conclusive(const SubsystemShape& shape) {
  const int a = shape.dims[0], b = shape.dims[1];
  return a * b <= 6;  // 2x2 and 2x3 (either order)
}

}  // namespace

Verdict ph_criterion(const DensityMatrix& rho, double tol) {
  require_bipartite(rho, "ph_criterion");
  const Matrix pt = partial_transpose(rho.mat, rho.shape, 1);
  const double min_eig = eig_hermitian(pt).values.minCoeff();
  if (min_eig < -tol) return {Status::Entangled, "ph", min_eig};
  if (ppt_conclusive(rho.shape)) return {Status::Separable, "ph", min_eig};
  return {Status::Indeterminate, "ph", min_eig};
}

Verdict ph_determinant_form(const DensityMatrix& rho, double tol) {
  require_bipartite(rho, "ph_determinant_form");
  if (rho.shape.dims[0] != 2 || rho.shape.dims[1] != 2)
    throw ValidationError("ph_determinant_form: defined for 2x2 states only");

  // pt((m,mu),(eta,v)) = rho((m,v),(eta,mu)), basis order 00,01,10,11.
  Matrix pt(4, 4);
  for (int m = 0; m < 2; ++m)
    for (int mu = 0; mu < 2; ++mu)
      for (int eta = 0; eta < 2; ++eta)
        for (int v = 0; v < 2; ++v)
          pt(2 * m + mu, 2 * eta + v) = rho.mat(2 * m + v, 2 * eta + mu);

  const double det_w2 = pt.topLeftCorner(2, 2).determinant().real();
  const double det_w3 = pt.topLeftCorner(3, 3).determinant().real();
  const double det_w4 = pt.determinant().real();

  const bool entangled =
      (det_w3 < -tol || det_w4 < -tol) && det_w2 >= -tol;
  const double witness = std::min(det_w3, det_w4);
  if (entangled) return {Status::Entangled, "ph-determinant", witness};
  return {Status::Separable, "ph-determinant", witness};
}

Verdict bloch_separability(const BlochRep& b, int M, int N, double tol) {
  if (M != 2)
    throw ValidationError("bloch_separability: only qubit-qudit (M = 2) is supported");
  if (N != b.d)
    throw ValidationError("bloch_separability: N inconsistent with the Bloch representation");

  const double s = N / 2.0;  // expectation values -> canonical coefficients
  const double lhs = std::sqrt(2.0 * (M - 1) / M) * b.X.norm() +
                     std::sqrt(2.0 * (N - 1) / N) * (s * b.Y).norm() +
                     std::sqrt(4.0 * (M - 1) * (N - 1) / (M * N)) *
                         ky_fan_norm((s * b.T).cast<Complex>());
  if (lhs <= 1.0 + tol) return {Status::Separable, "bloch-norm", lhs};
  return {Status::Indeterminate, "bloch-norm", lhs};
}

bool nonbroadcastable_predicate(const BlochRep& b) {
  if (b.d != 3)
    throw ValidationError("nonbroadcastable_predicate: defined for 2x3 inputs");
  const double s = 1.5;
  const double a = b.X.norm();
  const double bb = (s * b.Y).norm();
  double colsum = 0;
  for (long j = 0; j < b.T.cols(); ++j) colsum += (s * b.T.col(j)).norm();
  return (2.0 / 3.0) * colsum <= (12.0 - 8.0 * a - 15.0 * bb) / (10.0 * std::sqrt(3.0));
}

bool absolute_separability(const DensityMatrix& rho, double tol) {
  require_bipartite(rho, "absolute_separability");
  if (rho.shape.dims[0] != 2 || rho.shape.dims[1] != 2)
    throw ValidationError("absolute_separability: defined for 2x2 states only");
  const RealVector lam = eig_hermitian(rho.mat).values;  // descending
  const double prod = std::max(lam(1) * lam(3), 0.0);
  return lam(0) <= lam(2) + 2.0 * std::sqrt(prod) + tol;
}

Verdict realignment_criterion(const DensityMatrix& rho, double tol) {
  require_bipartite(rho, "realignment_criterion");
  const double excess = trace_norm(realign(rho.mat, rho.shape)) - 1.0;
  if (excess > tol) return {Status::Entangled, "realignment", excess};
  return {Status::Indeterminate, "realignment", excess};
}

bool pptes_detect(const DensityMatrix& rho, double tol) {
  const Verdict ph = ph_criterion(rho, tol);
  if (ph.status == Status::Entangled) return false;  // NPT, not bound
  return realignment_criterion(rho, tol).status == Status::Entangled;
}

}  // namespace quditcast
