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

/// Pauli matrices; index 0 is the identity, 1..3 are x, y, z.
const Matrix2 &pauli(int k);

GateMatrix kron(const Matrix2 &a, const Matrix2 &b);

double max_abs(const GateMatrix &m);
double max_abs(const RealMatrix4 &m);
bool is_unitary(const GateMatrix &m, double tolerance = tol::kStructural);
bool is_unitary(const Matrix2 &m, double tolerance = tol::kStructural);

/// Columns are the magic states |1>..|4> in the computational basis:
///   |1> = -i/sqrt2 (|01> + |10>)   |2> = 1/sqrt2 (|00> + |11>)
///   |3> = -i/sqrt2 (|00> - |11>)   |4> = 1/sqrt2 (|01> - |10>)
const GateMatrix &magic_basis();

/// Q^dagger m Q.
GateMatrix to_magic(const GateMatrix &m);
/// Q m Q^dagger.
GateMatrix from_magic(const GateMatrix &m);

struct SpecialNormalized {
  GateMatrix special;  // det == 1
  Complex phase;       // m == phase * special
};

/// Divides out the principal fourth root of det(m).
/// Throws NonUnitary.
SpecialNormalized special_normalize(const GateMatrix &m);

struct SymmetricUnitaryEigen {
  RealOrthogonal4 o;            // proper
  std::array<double, 4> phases;  // m == o^T diag(e^{i phases}) o
};

/// Diagonalizes a symmetric unitary by a real proper orthogonal matrix. Re(m)
/// and Im(m) are commuting real symmetric matrices; they are Jacobi
/// diagonalized jointly.
/// Throws NotSymmetric, NonUnitary, DiagonalizationFailed.
SymmetricUnitaryEigen joint_diagonalize_symmetric_unitary(const GateMatrix &m);

/// Recovers phase * (A (x) B) with det(A) = det(B) = 1 and the first
/// significant entry of each factor in the right half plane.
/// Throws NotAProduct.
LocalUnitaryPair kron_factor(const GateMatrix &m);

/// Maps a proper rotation given in the magic basis to its local pair.
/// Throws ImproperRotation.
LocalUnitaryPair so4_to_local(const RealOrthogonal4 &o);

/// exp(-i H_lambda t) in the computational basis. Throws NegativeDuration.
GateMatrix drift_exponential(const LambdaVector &lambda, double t);

}  // namespace gateforge
