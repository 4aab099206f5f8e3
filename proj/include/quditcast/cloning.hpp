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

#include "quditcast/bloch.hpp"
#include "quditcast/linalg.hpp"

// Symmetric optimal universal (Heisenberg) 1->2 qudit cloner and the local
// broadcasting protocol built from it.
//
// Protocol: Alice and Bob each hold one side of a 2 x d input state rho_12
// and locally clone it. Blank and machine systems start in |00>, so the
// cloner enters as an isometry V_d : C^d -> C^{d^3} with output ordering
// |clone-a, clone-b, machine>. After interleaving the six subsystems to
// the canonical order (1..6) = (Alice a, Bob a, Alice b, Bob b, Alice
// machine, Bob machine) and tracing the machines, the four pair outputs
// are rho_13 (Alice local, 2x2), rho_24 (Bob local, d x d), and the
// nonlocal pairs rho_14 and rho_23 (each 2 x d, qubit side first).

namespace quditcast {

struct CloningIsometry {
  int d = 0;
  Matrix V;  // d^3 x d, V^dag V = I_d
};

// Cached per dimension; reference valid for the program lifetime.
const CloningIsometry& heisenberg_isometry(int d);

struct BroadcastOutputs {
  DensityMatrix rho_13;  // Alice local (2 x 2)
  DensityMatrix rho_24;  // Bob local (d x d)
  DensityMatrix rho_14;  // nonlocal (2 x d)
  DensityMatrix rho_23;  // nonlocal (2 x d), equals rho_14 for this cloner
};

// Full six-party pipeline. Validates that the input is a 2 x d state
// (Hermitian, unit trace within 1e-10).
BroadcastOutputs broadcast(const DensityMatrix& rho12);

// Bloch shrink factor of the d-dimensional cloner on the qudit side,
// calibrated once per dimension against broadcast(); 2/3 on the qubit
// side. For d=3 the calibrated value is 5/8 (and the correlation matrix
// shrinks by their product 5/12).
double qudit_shrink_factor(int d);

// Calibrated fast path for the nonlocal outputs:
//   (X, Y, T) -> (2/3 X, s_d Y, 2/3 s_d T),  s_d = qudit_shrink_factor(d).
// Never a source of truth; the acceptance suite gates it against the full
// protocol.
BlochRep nonlocal_output_fast(const BlochRep& b);

// The protocol is linear in rho_12, so each reduced output is a fixed
// superoperator. BroadcastChannel holds the four superoperators,
// precomputed by feeding matrix units through the honest pipeline; apply()
// then reproduces broadcast() up to floating-point roundoff at a fraction
// of the cost. Used by the sweep/table machinery.
class BroadcastChannel {
 public:
  explicit BroadcastChannel(int d);
  int d() const { return d_; }
  BroadcastOutputs apply(const DensityMatrix& rho12) const;

 private:
  int d_;
  Matrix s13_, s24_, s14_, s23_;  // row-major vec(rho_in) -> vec(rho_out)
};

// Cached per dimension.
const BroadcastChannel& broadcast_channel(int d);

}  // namespace quditcast
