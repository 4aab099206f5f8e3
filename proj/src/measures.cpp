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

#include "quditcast/measures.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace quditcast {

MeasureValue geometric_discord(const DensityMatrix& rho) {
  const BlochRep b = decompose(rho);  // validates the 2 x d shape
  const double scale = b.d / 2.0;
  const Eigen::MatrixXd t = scale * b.T;
  const Eigen::Matrix3d omega = b.X * b.X.transpose() + t * t.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(omega, Eigen::EigenvaluesOnly);
  const double lambda_max = es.eigenvalues().maxCoeff();
  double value =
      (b.X.squaredNorm() + t.squaredNorm() - lambda_max) / (2.0 * b.d);
  if (value < -criterion_tol)
    throw NumericsError("geometric_discord: value " + std::to_string(value) +
                        " is negative beyond tolerance");
  if (value < 0) value = 0;
  return {MeasureKind::GeometricDiscord, value, ""};
}

MeasureValue l1_coherence(const DensityMatrix& rho) {
  double sum = 0;
  for (Eigen::Index i = 0; i < rho.mat.rows(); ++i)
    for (Eigen::Index j = 0; j < rho.mat.cols(); ++j)
      if (i != j) sum += std::abs(rho.mat(i, j));
  return {MeasureKind::L1Coherence, sum, "computational"};
}

double alice_local_coherence_formula(const Eigen::Vector3d& x) {
  return 1.0 / 3.0 + (4.0 / 3.0) * std::sqrt(x(0) * x(0) + x(1) * x(1));
}

}  // namespace quditcast
