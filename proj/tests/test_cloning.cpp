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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "quditcast/cloning.hpp"
#include "quditcast/families.hpp"

using namespace quditcast;
using qtest::maxdiff;

TEST_CASE("cloning isometries are isometries") {
  for (int d : {2, 3, 4, 5}) {
    const Matrix& v = heisenberg_isometry(d).V;
    REQUIRE(v.rows() == d * d * d);
    REQUIRE(v.cols() == d);
    CHECK(maxdiff(v.adjoint() * v, identity(d)) < 1e-12);
  }
  CHECK_THROWS_AS(heisenberg_isometry(1), ValidationError);
}

TEST_CASE("isometry columns carry the exact superposition amplitudes") {
  const int d = 3;
  const Matrix& v = heisenberg_isometry(d).V;
  const double amp = std::sqrt(2.0 / (d + 1));
  auto idx = [d](int a, int b, int c) { return (a * d + b) * d + c; };
  for (int j = 0; j < d; ++j) {
    Eigen::VectorXcd expect = Eigen::VectorXcd::Zero(d * d * d);
    expect(idx(j, j, j)) = amp;
    for (int r = 1; r < d; ++r) {
      const int jr = (j + r) % d;
      expect(idx(j, jr, jr)) = amp / 2;
      expect(idx(jr, j, jr)) = amp / 2;
    }
    CHECK((v.col(j) - expect).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("single-clone fidelity is (d+3)/(2(d+1)) uniformly") {
  for (int d : {2, 3}) {
    const Matrix& v = heisenberg_isometry(d).V;
    const double expect = (d + 3.0) / (2.0 * (d + 1));
    const int trials = d == 2 ? 100 : 50;
    for (int i = 0; i < trials; ++i) {
      const Eigen::VectorXcd psi = qtest::random_ket(d, 3000 + 10 * d + i);
      const Eigen::VectorXcd out = v * psi;
      const Matrix rho3 = out * out.adjoint();
      for (int clone : {0, 1}) {
        const Matrix red = partial_trace(rho3, SubsystemShape{d, d, d}, {clone});
        const double f = (psi.adjoint() * red * psi)(0, 0).real();
        CHECK(std::abs(f - expect) < 1e-12);
      }
    }
  }
}

TEST_CASE("nonlocal outputs scale the input representation by (2/3, 5/8, 5/12)") {
  for (int i = 0; i < 50; ++i) {
    const DensityMatrix rho = qtest::random_2xd(3, 6, 4000 + i);
    const BlochRep in = decompose(rho);
    const BroadcastOutputs out = broadcast(rho);
    const BlochRep nl = decompose(out.rho_14);
    CHECK((nl.X - (2.0 / 3) * in.X).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((nl.Y - (5.0 / 8) * in.Y).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((nl.T - (5.0 / 12) * in.T).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(maxdiff(out.rho_14.mat, out.rho_23.mat) < 1e-12);
  }
}

TEST_CASE("broadcast of the maximally mixed input") {
  const DensityMatrix rho{kron(identity(2) / 2, identity(3) / 3), SubsystemShape{2, 3}};
  const BroadcastOutputs out = broadcast(rho);

  const BlochRep nl = decompose(out.rho_14);
  CHECK(nl.X.cwiseAbs().maxCoeff() < 1e-14);
  CHECK(nl.Y.cwiseAbs().maxCoeff() < 1e-14);

  // Alice's output is the fixed point (1/4)(I + (1/3) sum sigma x sigma)
  Matrix fixed = identity(4);
  for (int i = 0; i < 3; ++i) fixed += kron(qtest::pauli(i), qtest::pauli(i)) / 3.0;
  fixed /= 4.0;
  CHECK(maxdiff(out.rho_13.mat, fixed) < 1e-14);
}

TEST_CASE("Alice's local output has the dimension-independent form") {
  for (int d : {2, 3, 4, 5}) {
    const DensityMatrix rho = qtest::random_2xd(d, 2 * d, 5000 + d);
    const BlochRep in = decompose(rho);
    const BroadcastOutputs out = broadcast(rho);
    const BlochRep alice = decompose(out.rho_13);
    CHECK((alice.X - (2.0 / 3) * in.X).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((alice.Y - (2.0 / 3) * in.X).cwiseAbs().maxCoeff() < 1e-10);
    Eigen::MatrixXd t13 = Eigen::MatrixXd::Zero(3, 3);
    t13.diagonal().setConstant(1.0 / 3);
    CHECK((alice.T - t13).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("all outputs are unit-trace positive states") {
  for (int i = 0; i < 10; ++i) {
    const DensityMatrix rho = qtest::random_2xd(3, 6, 6000 + i);
    const BroadcastOutputs out = broadcast(rho);
    for (const DensityMatrix* o : {&out.rho_13, &out.rho_24, &out.rho_14, &out.rho_23}) {
      CHECK(std::abs(o->mat.trace().real() - 1.0) < 1e-10);
      CHECK(eig_hermitian(o->mat).values.minCoeff() > -1e-9);
    }
  }
}

TEST_CASE("broadcast is linear in the input state") {
  const DensityMatrix a = qtest::random_2xd(3, 6, 7001);
  const DensityMatrix b = qtest::random_2xd(3, 6, 7002);
  const double p = 0.3;
  const DensityMatrix mix{p * a.mat + (1 - p) * b.mat, SubsystemShape{2, 3}};

  const BroadcastOutputs oa = broadcast(a), ob = broadcast(b), om = broadcast(mix);
  CHECK(maxdiff(om.rho_14.mat, p * oa.rho_14.mat + (1 - p) * ob.rho_14.mat) < 1e-10);
  CHECK(maxdiff(om.rho_13.mat, p * oa.rho_13.mat + (1 - p) * ob.rho_13.mat) < 1e-10);
  CHECK(maxdiff(om.rho_24.mat, p * oa.rho_24.mat + (1 - p) * ob.rho_24.mat) < 1e-10);
}

TEST_CASE("bob's local output reproduces the expected mems matrix entries") {
  for (double r : {0.55, 0.75, 0.97}) {
    const BroadcastOutputs out = broadcast(mems(r));
    Matrix expect = Matrix::Zero(9, 9);
    expect(0, 0) = r / 4;
    expect(8, 8) = r / 4;
    expect(4, 4) = (1 - r) / 2;
    for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 1}, {1, 3}, {3, 1}, {3, 3},
                                                        {5, 5}, {5, 7}, {7, 5}, {7, 7}})
      expect(i, j) = (2 - r) / 16;
    for (auto [i, j] : std::vector<std::pair<int, int>>{{2, 2}, {2, 6}, {6, 2}, {6, 6}})
      expect(i, j) = r / 8;
    CHECK(maxdiff(out.rho_24.mat, expect) < 1e-14);
  }
}

TEST_CASE("channel evaluation agrees with the full pipeline") {
  const BroadcastChannel& chan = broadcast_channel(3);
  for (int i = 0; i < 10; ++i) {
    const DensityMatrix rho = qtest::random_2xd(3, 6, 8000 + i);
    const BroadcastOutputs full = broadcast(rho);
    const BroadcastOutputs fast = chan.apply(rho);
    CHECK(maxdiff(full.rho_13.mat, fast.rho_13.mat) < 1e-13);
    CHECK(maxdiff(full.rho_24.mat, fast.rho_24.mat) < 1e-13);
    CHECK(maxdiff(full.rho_14.mat, fast.rho_14.mat) < 1e-13);
    CHECK(maxdiff(full.rho_23.mat, fast.rho_23.mat) < 1e-13);
  }
}

TEST_CASE("fast nonlocal map is calibrated against the protocol") {
  CHECK(std::abs(qudit_shrink_factor(3) - 5.0 / 8) < 1e-12);

  SUBCASE("zero maps to zero") {
    const BlochRep z = nonlocal_output_fast(BlochRep::zero(3));
    CHECK(z.X.cwiseAbs().maxCoeff() == 0.0);
    CHECK(z.Y.cwiseAbs().maxCoeff() == 0.0);
    CHECK(z.T.cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("matches the protocol output for random qutrit-side states") {
    for (int i = 0; i < 20; ++i) {
      const DensityMatrix rho = qtest::random_2xd(3, 6, 9000 + i);
      const BlochRep fast = nonlocal_output_fast(decompose(rho));
      const BlochRep full = decompose(broadcast(rho).rho_14);
      CHECK((fast.X - full.X).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((fast.Y - full.Y).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((fast.T - full.T).cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  SUBCASE("d = 4 shrink factor is a single constant across components") {
    const double s4 = qudit_shrink_factor(4);
    for (int i = 0; i < 50; ++i) {
      const DensityMatrix rho = qtest::random_2xd(4, 8, 9500 + i);
      const BlochRep in = decompose(rho);
      const BlochRep out = decompose(broadcast(rho).rho_14);
      for (long j = 0; j < in.Y.size(); ++j) {
        if (std::abs(in.Y(j)) < 1e-3) continue;
        CHECK(std::abs(out.Y(j) / in.Y(j) - s4) < 1e-10);
      }
    }
  }
}

TEST_CASE("broadcast validates its input") {
  CHECK_THROWS_AS(broadcast(DensityMatrix{identity(9) / 9, SubsystemShape{3, 3}}),
                  ValidationError);
  CHECK_THROWS_AS(broadcast(DensityMatrix{identity(6), SubsystemShape{2, 3}}),
                  ValidationError);
  Matrix m = identity(6) / 6;
  m(0, 1) = Complex(0, 0.3);  // not Hermitian
  CHECK_THROWS_AS(broadcast(DensityMatrix{m, SubsystemShape{2, 3}}), ValidationError);
}
