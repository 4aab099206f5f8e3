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

#include <Eigen/Dense>
#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

// Dense complex matrix kernel for multipartite quantum states: tensor
// products, partial trace / transpose, subsystem permutation, Hermitian
// eigendecomposition, trace norm and the realignment map. Everything in
// scope is at most 1000x1000 dense, so there is no sparse machinery.
//
// Subsystem indexing is row-major: for dims {d0, d1, ...} the flat index
// of |a0 a1 ...> is ((a0*d1 + a1)*d2 + a2)... with subsystem 0 the most
// significant digit, matching kron(A0, A1, ...).

namespace quditcast {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Domain / dimension / input-validation failures.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Numerical contract violations detected at runtime (e.g. a measure that
// should be non-negative coming out significantly negative).
struct NumericsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Hermiticity is checked to this max-norm bound before eigensolving.
inline constexpr double hermiticity_tol = 1e-12;
// Default tolerance for sign decisions in separability criteria.
inline constexpr double criterion_tol = 1e-9;

// Ordered tensor factorization of a state space, e.g. {2,3} or {2,3,2,3,2,3}.
struct SubsystemShape {
  std::vector<int> dims;

  SubsystemShape() = default;
  SubsystemShape(std::initializer_list<int> d) : dims(d) { validate(); }
  explicit SubsystemShape(std::vector<int> d) : dims(std::move(d)) { validate(); }

  int parts() const { return static_cast<int>(dims.size()); }
  long total() const;
  void validate() const;  // every dim >= 2
  void require_matches(const Matrix& m) const;
};

// A square matrix annotated with its tensor factorization. Positivity and
// unit trace are properties of *states*; they are validated where states
// enter the system (file loading, family constructors), not on every use.
struct DensityMatrix {
  Matrix mat;
  SubsystemShape shape;

  DensityMatrix() = default;
  DensityMatrix(Matrix m, SubsystemShape s);

  int dim() const { return static_cast<int>(mat.rows()); }
  DensityMatrix with_shape(SubsystemShape s) const { return {mat, std::move(s)}; }

  // Hermiticity, unit trace and positivity within tol.
  void require_valid_state(double tol = criterion_tol) const;
};

Matrix identity(int d);
Matrix kron(const Matrix& a, const Matrix& b);

bool is_hermitian(const Matrix& m, double tol = hermiticity_tol);
Matrix hermitize(const Matrix& m);  // (m + m^dag) / 2

// Reduced matrix on the kept subsystems (set semantics; induced order is
// ascending). Throws ValidationError on shape mismatch or empty keep set.
Matrix partial_trace(const Matrix& rho, const SubsystemShape& shape,
                     const std::vector<int>& keep);

// Transpose of subsystem `which`: rho_{..m.., ..n..} -> rho_{..n.., ..m..}
// in that subsystem's indices. Involution; preserves trace and Hermiticity.
Matrix partial_transpose(const Matrix& rho, const SubsystemShape& shape, int which);

// Reorder subsystems; perm[k] names the old subsystem placed at slot k.
Matrix permute_subsystems(const Matrix& rho, const SubsystemShape& shape,
                          const std::vector<int>& perm);

struct EigResult {
  RealVector values;  // descending
  Matrix vectors;     // columns matching `values`
};

// Eigendecomposition of a Hermitian matrix. The input must be Hermitian
// within hermiticity_tol; it is symmetrized before solving so downstream
// criteria are insensitive to accumulated floating-point asymmetry.
EigResult eig_hermitian(const Matrix& m);

// Sum of singular values. ky_fan_norm is the same value under the name
// used by the separability criterion.
double trace_norm(const Matrix& m);
double ky_fan_norm(const Matrix& m);

// Realignment map on a bipartite (m x n) system:
//   R(|i><j| (x) |k><l|) = |i><k| (x) |j><l|,
// extended linearly; output is m^2 x n^2. realign_inverse applies the
// inverse index arrangement and recovers the input exactly.
Matrix realign(const Matrix& rho, const SubsystemShape& shape);
Matrix realign_inverse(const Matrix& r, const SubsystemShape& shape);

}  // namespace quditcast
