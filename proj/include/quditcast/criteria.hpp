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

// Separability / entanglement classification. Sufficient criteria never
// classify by failure: a state that merely violates a sufficient
// separability condition is Indeterminate, and a non-negative partial
// transpose is conclusive (Separable) only in 2x2 and 2x3.

namespace quditcast {

enum class Status { Separable, Entangled, Indeterminate };

const char* to_string(Status s);

struct Verdict {
  Status status = Status::Indeterminate;
  std::string criterion;  // which test produced the status
  double witness = 0.0;   // min PT eigenvalue, norm excess, or determinant
};

// Positivity of the partial transpose (transpose taken on the second
// subsystem). Entangled with witness = min eigenvalue when it is below
// -tol; otherwise Separable for 2x2 / 2x3 (either order) and Indeterminate
// for larger systems, where PPT is only necessary.
Verdict ph_criterion(const DensityMatrix& rho, double tol = criterion_tol);

// Determinant form of the same test for 2x2 states: the nested 2/3/4
// principal minors W2, W3, W4 of the partially transposed matrix, built
// directly from the index relation. Entangled iff det W3 < 0 or
// det W4 < 0 while det W2 >= 0; agrees with ph_criterion on every 2x2
// input.
Verdict ph_determinant_form(const DensityMatrix& rho, double tol = criterion_tol);

// Bloch-norm sufficient separability condition for an M x N state
// (restricted here to M = 2, N = b.d):
//   sqrt(2(M-1)/M) |x| + sqrt(2(N-1)/N) |y| + sqrt(4(M-1)(N-1)/MN) |T|_KF <= 1
// evaluated on canonical-form coefficients (y and T scaled by N/2 from the
// stored expectation values). Separable when it holds, else Indeterminate.
Verdict bloch_separability(const BlochRep& b, int M, int N, double tol = criterion_tol);

// Stated non-broadcastability inequality for 2x3 inputs, taken verbatim:
//   (2/3) sum_j |t_col_j| <= (12 - 8 |x| - 15 |y|) / (10 sqrt(3)),
// with the column-norm sum of T (not the Ky-Fan norm) and the same
// coefficient scaling as bloch_separability. Kept as a bare predicate,
// deliberately not routed through Verdict and not asserted equivalent to
// bloch_separability of the scaled output.
bool nonbroadcastable_predicate(const BlochRep& b);

// Two-qubit absolute separability: with eigenvalues sorted descending,
// lambda_1 <= lambda_3 + 2 sqrt(lambda_2 lambda_4) (within tol).
bool absolute_separability(const DensityMatrix& rho, double tol = criterion_tol);

// Realignment criterion: trace norm of the realigned matrix above 1
// certifies entanglement (witness = excess); otherwise Indeterminate.
Verdict realignment_criterion(const DensityMatrix& rho, double tol = criterion_tol);

// Bound-entanglement detector: positive partial transpose AND realignment
// certifies entanglement.
bool pptes_detect(const DensityMatrix& rho, double tol = criterion_tol);

}  // namespace quditcast
