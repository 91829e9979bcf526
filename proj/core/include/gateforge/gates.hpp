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

#include <string_view>

#include "gateforge/types.hpp"

namespace gateforge {

enum class NamedGate { Identity, CNOT, DCNOT, SWAP, ControlledU };

std::string_view to_string(NamedGate g);

// Computational basis order is |00>, |01>, |10>, |11> with qubit A on the
// left throughout.

/// Control A, target B.
GateMatrix cnot_gate();
/// CNOT^{BA} CNOT^{AB}: |i, j> -> |j, i xor j>.
GateMatrix dcnot_gate();
GateMatrix swap_gate();
GateMatrix identity_gate();

/// |0><0| (x) 1 + |1><1| (x) diag(e^{-2i beta}, e^{2i beta}); the target
/// unitary has eigenvalues e^{+-2i beta} and the gate's content is
/// (beta, 0, 0) for 0 <= beta <= pi/4.
GateMatrix controlled_u_gate(double beta);

/// diag(1, 1, 1, e^{i phi}).
GateMatrix controlled_phase_gate(double phi);

/// `beta` is only read for ControlledU.
GateMatrix named_gate_matrix(NamedGate g, double beta = 0.0);

}  // namespace gateforge
