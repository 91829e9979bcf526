// Copyright 2026 The gateforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>

#include "gateforge/types.hpp"

namespace gateforge {

/// lambda = (a1+a2-a3, a1-a2+a3, -a1+a2+a3, -a1-a2-a3).
LambdaVector alpha_to_lambda(const AlphaVector &a);

/// Inverse of alpha_to_lambda. Throws NotTraceless if |sum| > 1e-9.
AlphaVector lambda_to_alpha(const LambdaVector &l);

/// How s_order rearranged its input: out[k] = sign[k] * in[perm[k]].
struct SOrderRecord {
  std::array<int, 3> perm{0, 1, 2};
  std::array<int, 3> sign{1, 1, 1};

  AlphaVector apply(const AlphaVector &in) const;
  AlphaVector invert(const AlphaVector &out) const;
};

struct SOrdered {
  AlphaVector alpha;
  SOrderRecord record;
};

/// Sorts moduli nonincreasingly and gives the third entry the sign of
/// a1*a2*a3 (zero if any factor vanishes).
SOrdered s_order(const AlphaVector &a);

/// True if a1 >= a2 >= |a3| within tolerance.
bool is_s_ordered(const AlphaVector &a, double tolerance = tol::kStructural);
/// True if pi/4 >= a1 >= a2 >= |a3| and a3 >= 0 whenever a1 == pi/4.
bool is_canonical(const AlphaVector &a, double tolerance = tol::kStructural);

/// Canonical representative of the local-equivalence class of U_a.
AlphaVector canonical_reduce(const AlphaVector &a);

/// Canonical alpha of a two-qubit gate. Throws NonUnitary.
AlphaVector interaction_content(const GateMatrix &g);

/// g == global_phase * post * exp(-i H_alpha) * pre.
struct KakDecomposition {
  LocalUnitaryPair post_local;
  AlphaVector alpha;
  LocalUnitaryPair pre_local;
  Complex global_phase{1.0, 0.0};

  GateMatrix reassemble() const;
};

/// Throws NonUnitary, BranchResolutionFailed.
KakDecomposition kak_decompose(const GateMatrix &g);

/// exp(-i sum_k a_k sigma_k (x) sigma_k), built from the Pauli products
/// directly (no magic basis involved).
GateMatrix canonical_gate(const AlphaVector &a);

/// sum_k a_k sigma_k (x) sigma_k.
GateMatrix alpha_hamiltonian(const AlphaVector &a);

/// Pure two-body coupling sum_ij c_ij sigma_i (x) sigma_j (radians per unit
/// time).
using CouplingMatrix = RealMatrix3;

GateMatrix coupling_hamiltonian(const CouplingMatrix &c);

struct HamiltonianCanonicalForm {
  AlphaVector alpha;              // s-ordered, not capped at pi/4
  LocalUnitaryPair conjugator;    // W with W H_c W^dagger == H_alpha
};

HamiltonianCanonicalForm hamiltonian_canonical(const CouplingMatrix &c);

/// Spin-1/2 lift of a proper 3x3 rotation: U sigma_i U^dagger ==
/// sum_k r(k, i) sigma_k, on the branch with nonnegative scalar part.
Matrix2 so3_to_su2(const RealMatrix3 &r);

}  // namespace gateforge
