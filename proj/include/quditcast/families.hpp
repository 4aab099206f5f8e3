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

#include <cstdint>
#include <random>

#include "quditcast/linalg.hpp"

// Parametrized 2x3 state families plus Haar-induced random mixed states.
// Basis ordering throughout: {|00>, |01>, |02>, |10>, |11>, |12>}.

namespace quditcast {

struct MemsParams {
  double r = 0;
  // subclass I for r <= 1/2, II for r >= 1/2 (both at the branch point,
  // where the two formulas produce the same matrix)
  bool in_subclass_one() const { return r <= 0.5; }
  bool in_subclass_two() const { return r >= 0.5; }
};

struct TpcsParams {
  double alpha = 0;
  double gamma = 0;
  double beta() const { return (1.0 - 2.0 * alpha - gamma) / 3.0; }
  void validate() const;  // domain and beta >= 0
};

// Maximally entangled mixed states, r in [0,1]. Two-branch family around
// r = 1/2 built from |phi+> = (|00> + |12>)/sqrt(2) and the level
// projectors; continuous across the branch point.
DensityMatrix mems(double r);

// Two-parameter class of states: alpha on the qutrit level-2 populations,
// gamma on the singlet, beta = (1 - 2 alpha - gamma)/3 on the remaining
// three Bell projectors (all on qutrit levels {0,1}).
DensityMatrix tpcs(double alpha, double gamma);

// Mixed state induced by tracing a rank_envelope-dimensional environment
// out of a Haar-random pure state: normalized G G^dag with G a standard
// complex Gaussian d_total x rank_envelope matrix. Bit-reproducible for a
// fixed seed. The returned shape is the trivial single-system {d_total};
// re-annotate with with_shape() as needed.
DensityMatrix haar_random_state(int d_total, int rank_envelope, std::uint64_t seed);

// Deterministic, platform-independent Gaussian stream (raw mt19937_64 bits
// mapped to uniforms, Box-Muller on top; none of the distribution wrappers
// with unspecified algorithms).
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : gen_(seed) {}
  double uniform();        // [0, 1)
  double gaussian();       // N(0, 1)
  Complex cgaussian();     // re, im independent N(0, 1)

 private:
  std::mt19937_64 gen_;
  double spare_ = 0;
  bool has_spare_ = false;
};

// Stable per-sample seed derivation from a master seed (splitmix64 mix).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace quditcast
