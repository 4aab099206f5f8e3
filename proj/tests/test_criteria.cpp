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

#include <cmath>

#include "helpers.hpp"
#include "quditcast/cloning.hpp"
#include "quditcast/criteria.hpp"
#include "quditcast/families.hpp"

using namespace quditcast;

namespace {

DensityMatrix bell_state() { return {qtest::bell22(), SubsystemShape{2, 2}}; }

BroadcastOutputs outputs(const DensityMatrix& rho) {
  return broadcast_channel(3).apply(rho);
}

}  // namespace

TEST_CASE("ph criterion on reference states") {
  const Verdict bell = ph_criterion(bell_state());
  CHECK(bell.status == Status::Entangled);
  CHECK(bell.witness == doctest::Approx(-0.5).epsilon(1e-12));

  const Verdict mixed =
      ph_criterion(DensityMatrix{identity(4) / 4, SubsystemShape{2, 2}});
  CHECK(mixed.status == Status::Separable);

  Matrix a = qtest::ginibre(2, 2, 101);
  a = (a * a.adjoint()).eval();
  a /= a.trace();
  Matrix b = qtest::ginibre(3, 3, 102);
  b = (b * b.adjoint()).eval();
  b /= b.trace();
  CHECK(ph_criterion(DensityMatrix{kron(a, b), SubsystemShape{2, 3}}).status ==
        Status::Separable);
}

TEST_CASE("ph criterion classifies the mems nonlocal outputs") {
  CHECK(ph_criterion(outputs(mems(0.40)).rho_14).status == Status::Separable);
  CHECK(ph_criterion(outputs(mems(0.50)).rho_14).status == Status::Entangled);
  // true boundary of the family sits in (0.4475, 0.4476)
  CHECK(ph_criterion(outputs(mems(0.4475)).rho_14).status == Status::Separable);
  CHECK(ph_criterion(outputs(mems(0.4476)).rho_14).status == Status::Entangled);

  for (double r = 0.5; r <= 1.0; r += 0.05)
    CHECK(ph_criterion(outputs(mems(r)).rho_14).status == Status::Entangled);
}

TEST_CASE("ph on a 3x3 state with non-negative spectrum stays inconclusive") {
  const Verdict v = ph_criterion(outputs(mems(0.6)).rho_24);
  CHECK(v.status == Status::Indeterminate);
  CHECK(v.witness > -1e-12);
}

TEST_CASE("determinant form agrees with the eigenvalue form") {
  const Verdict bell = ph_determinant_form(bell_state());
  CHECK(bell.status == Status::Entangled);
  CHECK(bell.witness < 0);

  CHECK(ph_determinant_form(DensityMatrix{identity(4) / 4, SubsystemShape{2, 2}})
            .status == Status::Separable);

  for (int i = 0; i < 300; ++i) {
    const DensityMatrix rho = qtest::random_2xd(2, 4, 200 + i);
    CHECK(ph_determinant_form(rho).status == ph_criterion(rho).status);
  }

  CHECK_THROWS_AS(
      ph_determinant_form(DensityMatrix{identity(6) / 6, SubsystemShape{2, 3}}),
      ValidationError);
}

TEST_CASE("bloch separability certifies or abstains") {
  const Verdict zero = bloch_separability(BlochRep::zero(3), 2, 3);
  CHECK(zero.status == Status::Separable);
  CHECK(zero.witness == doctest::Approx(0.0));

  const Verdict pure = bloch_separability(decompose(mems(1.0)), 2, 3);
  CHECK(pure.status == Status::Indeterminate);
  CHECK(pure.witness > 1.0);

  CHECK_THROWS_AS(bloch_separability(BlochRep::zero(3), 3, 3), ValidationError);
  CHECK_THROWS_AS(bloch_separability(BlochRep::zero(3), 2, 4), ValidationError);
}

TEST_CASE("bloch separability never contradicts an entangled ph verdict") {
  int certified = 0;
  for (int i = 0; i < 300; ++i) {
    const DensityMatrix rho = qtest::random_2xd(3, 6, 300 + i);
    if (ph_criterion(rho).status == Status::Entangled)
      CHECK(bloch_separability(decompose(rho), 2, 3).status != Status::Separable);
    else if (bloch_separability(decompose(rho), 2, 3).status == Status::Separable)
      ++certified;
  }
  for (int i = 0; i < 300; ++i) {
    const DensityMatrix rho = qtest::random_2xd(2, 4, 400 + i);
    if (ph_criterion(rho).status == Status::Entangled)
      CHECK(bloch_separability(decompose(rho), 2, 2).status != Status::Separable);
  }
}

TEST_CASE("stated non-broadcastability inequality") {
  CHECK(nonbroadcastable_predicate(BlochRep::zero(3)));
  CHECK_FALSE(nonbroadcastable_predicate(decompose(mems(1.0))));
  CHECK_THROWS_AS(nonbroadcastable_predicate(BlochRep::zero(4)), ValidationError);
}

TEST_CASE("absolute separability on reference states") {
  CHECK(absolute_separability(DensityMatrix{identity(4) / 4, SubsystemShape{2, 2}}));
  CHECK_FALSE(absolute_separability(bell_state()));
  CHECK_THROWS_AS(
      absolute_separability(DensityMatrix{identity(6) / 6, SubsystemShape{2, 3}}),
      ValidationError);
}

TEST_CASE("absolute separability of Alice's local outputs over the mems family") {
  // subclass I: holds only at the branch point
  for (double r : {0.0, 0.2, 0.4, 0.49, 0.4999})
    CHECK_FALSE(absolute_separability(outputs(mems(r)).rho_13));
  CHECK(absolute_separability(outputs(mems(0.5)).rho_13));
  // subclass II: holds everywhere
  for (double r : {0.6, 0.75, 0.9, 1.0})
    CHECK(absolute_separability(outputs(mems(r)).rho_13));
}

TEST_CASE("realignment criterion on reference states") {
  Matrix a = qtest::ginibre(2, 2, 501);
  a = (a * a.adjoint()).eval();
  a /= a.trace();
  Matrix b = qtest::ginibre(2, 2, 502);
  b = (b * b.adjoint()).eval();
  b /= b.trace();
  const Verdict prod =
      realignment_criterion(DensityMatrix{kron(a, b), SubsystemShape{2, 2}});
  CHECK(prod.status == Status::Indeterminate);
  CHECK(prod.witness <= 1e-12);

  const Verdict bell = realignment_criterion(bell_state());
  CHECK(bell.status == Status::Entangled);
  CHECK(bell.witness == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(realignment_criterion(outputs(mems(0.96)).rho_24).status == Status::Entangled);
}

TEST_CASE("bob's mems output: realignment and negativity switch on together") {
  // below the boundary (14+4sqrt(6))/25 = 0.951918...: positive partial
  // transpose and realignment at most 1
  for (double r : {0.5, 0.7, 0.90, 0.945}) {
    const DensityMatrix bob = outputs(mems(r)).rho_24;
    CHECK(ph_criterion(bob).status == Status::Indeterminate);
    CHECK(realignment_criterion(bob).status == Status::Indeterminate);
    CHECK_FALSE(pptes_detect(bob));
  }
  // above it the state is NPT *and* realignment-detected, so the
  // PPT-and-realignment detector never fires on this family
  for (double r : {0.96, 0.97, 1.0}) {
    const DensityMatrix bob = outputs(mems(r)).rho_24;
    const Verdict ph = ph_criterion(bob);
    const Verdict re = realignment_criterion(bob);
    CHECK(ph.status == Status::Entangled);
    CHECK(re.status == Status::Entangled);
    // the two witnesses track each other exactly on this family
    CHECK(std::abs(re.witness + 2 * ph.witness) < 1e-12);
    CHECK_FALSE(pptes_detect(bob));
  }
  // the detection boundary itself
  const double boundary = (14 + 4 * std::sqrt(6.0)) / 25;
  CHECK(ph_criterion(outputs(mems(boundary - 1e-4)).rho_24).status ==
        Status::Indeterminate);
  CHECK(ph_criterion(outputs(mems(boundary + 1e-4)).rho_24).status ==
        Status::Entangled);
}

TEST_CASE("bob's tpcs output windows in alpha") {
  auto bob = [](double a) { return outputs(tpcs(a, std::min(0.05, 1 - 2 * a))).rho_24; };
  const double lo = (11 - 4 * std::sqrt(6.0)) / 50;   // 0.0240408...
  const double hi = (11 + 4 * std::sqrt(6.0)) / 50;   // 0.4159591...

  for (double a : {0.001, 0.01, 0.45, 0.49}) {
    const DensityMatrix m = bob(a);
    CHECK(ph_criterion(m).status == Status::Entangled);
    CHECK(realignment_criterion(m).status == Status::Entangled);
    CHECK_FALSE(pptes_detect(m));
  }
  for (double a : {0.03, 0.1, 0.2, 0.3, 0.41}) {
    const DensityMatrix m = bob(a);
    CHECK(ph_criterion(m).status == Status::Indeterminate);
    CHECK(realignment_criterion(m).status == Status::Indeterminate);
    CHECK_FALSE(pptes_detect(m));
  }
  CHECK(ph_criterion(bob(lo - 1e-4)).status == Status::Entangled);
  CHECK(ph_criterion(bob(lo + 1e-4)).status == Status::Indeterminate);
  CHECK(ph_criterion(bob(hi - 1e-4)).status == Status::Indeterminate);
  CHECK(ph_criterion(bob(hi + 1e-4)).status == Status::Entangled);
}

TEST_CASE("pptes detector rejects plainly negative partial transposes") {
  CHECK_FALSE(pptes_detect(bell_state()));
}

TEST_CASE("entangled verdicts always carry a witness beyond tolerance") {
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = qtest::random_2xd(3, 4, 600 + i);
    const Verdict v = ph_criterion(rho);
    if (v.status == Status::Entangled) CHECK(v.witness < -criterion_tol);
    const Verdict r = realignment_criterion(rho);
    if (r.status == Status::Entangled) CHECK(r.witness > criterion_tol);
  }
}
