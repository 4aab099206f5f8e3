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

#include "quditcast/families.hpp"

#include <cmath>

namespace quditcast {

namespace {

// basis index of |a b> in {00,01,02,10,11,12}
constexpr int bi(int a, int b) { return 3 * a + b; }

void add_projector(Matrix& m, const Eigen::VectorXcd& ket, double weight) {
  m += weight * (ket * ket.adjoint());
}

}  // namespace

void TpcsParams::validate() const {
  if (alpha < 0 || alpha > 0.5)
    throw ValidationError("tpcs: alpha must lie in [0, 1/2]");
  if (gamma < 0 || gamma > 1)
    throw ValidationError("tpcs: gamma must lie in [0, 1]");
  if (beta() < -1e-12)
    throw ValidationError("tpcs: beta = (1 - 2 alpha - gamma)/3 < 0 violates the "
                          "unit-trace constraint 2 alpha + 3 beta + gamma = 1");
}

DensityMatrix mems(double r) {
  if (r < 0 || r > 1) throw ValidationError("mems: r must lie in [0, 1]");
  Matrix m = Matrix::Zero(6, 6);

  Eigen::VectorXcd phi_plus = Eigen::VectorXcd::Zero(6);  // (|00> + |12>)/sqrt(2)
  phi_plus(bi(0, 0)) = 1 / std::sqrt(2.0);
  phi_plus(bi(1, 2)) = 1 / std::sqrt(2.0);
  add_projector(m, phi_plus, r);

  auto level = [&](int a, int b, double w) { m(bi(a, b), bi(a, b)) += w; };
  if (r <= 0.5) {
    const double w25 = (1 + r / 2) / 5;   // E2, E5
    const double w136 = (1 - 2 * r) / 5;  // E1, E3, E6
    level(0, 1, w25);
    level(1, 1, w25);
    level(0, 0, w136);
    level(0, 2, w136);
    level(1, 2, w136);
  } else {
    const double w25 = (1 - r) / 2;
    level(0, 1, w25);
    level(1, 1, w25);
  }
  return {std::move(m), SubsystemShape{2, 3}};
}

DensityMatrix tpcs(double alpha, double gamma) {
  TpcsParams p{alpha, gamma};
  p.validate();
  const double beta = p.beta();

  Matrix m = Matrix::Zero(6, 6);
  m(bi(0, 2), bi(0, 2)) = alpha;
  m(bi(1, 2), bi(1, 2)) = alpha;

  const double s = 1 / std::sqrt(2.0);
  Eigen::VectorXcd phi_p = Eigen::VectorXcd::Zero(6), phi_m = phi_p, psi_p = phi_p,
                   psi_m = phi_p;
  phi_p(bi(0, 0)) = s;
  phi_p(bi(1, 1)) = s;
  phi_m(bi(0, 0)) = s;
  phi_m(bi(1, 1)) = -s;
  psi_p(bi(0, 1)) = s;
  psi_p(bi(1, 0)) = s;
  psi_m(bi(0, 1)) = s;
  psi_m(bi(1, 0)) = -s;

  add_projector(m, phi_p, beta);
  add_projector(m, phi_m, beta);
  add_projector(m, psi_p, beta);
  add_projector(m, psi_m, gamma);
  return {std::move(m), SubsystemShape{2, 3}};
}

double GaussianStream::uniform() {
  // top 53 bits -> [0, 1); fully specified by the mt19937_64 contract
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double GaussianStream::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0) u1 = uniform();
  const double u2 = uniform();
  const double mag = std::sqrt(-2.0 * std::log(u1));
  spare_ = mag * std::sin(2.0 * M_PI * u2);
  has_spare_ = true;
  return mag * std::cos(2.0 * M_PI * u2);
}

Complex GaussianStream::cgaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return {re, im};
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 finalizer over master + golden-ratio-stepped index
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

DensityMatrix haar_random_state(int d_total, int rank_envelope, std::uint64_t seed) {
  if (d_total < 2) throw ValidationError("haar_random_state: d_total must be >= 2");
  if (rank_envelope < 1)
    throw ValidationError("haar_random_state: rank_envelope must be >= 1");
  GaussianStream rng(seed);
  Matrix g(d_total, rank_envelope);
  for (int i = 0; i < d_total; ++i)
    for (int j = 0; j < rank_envelope; ++j) g(i, j) = rng.cgaussian();
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  // single-system annotation; callers re-annotate for bipartite use
  return {std::move(rho), SubsystemShape{std::vector<int>{d_total}}};
}

}  // namespace quditcast
