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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gateforge/majorization.hpp"
#include "gateforge/types.hpp"

namespace gateforge {

// Transmission here means a single use of the gate, no ancillas and no prior
// entanglement.

enum class GateClass { NoTransmission, ClassCNOT, ClassDCNOT, ClassSWAP };

enum class CommTask {
  CbitAtoB,
  CbitBothWays,
  QubitAtoB,
  QubitAtoBplusCbitBtoA,
  QubitBothWays,
};

std::string_view to_string(GateClass c);
std::string_view to_string(CommTask t);
/// Throws InvalidInput.
CommTask parse_comm_task(std::string_view name);

inline constexpr double kClassTolerance = 1e-9;

/// Decided by which components of the canonical content sit at pi/4.
GateClass classify(const AlphaVector &beta,
                   double tolerance = kClassTolerance);

std::vector<CommTask> capabilities(GateClass c);

/// Three marks for cbit A->B, qubit A->B with cbit B->A, and qubit A<->B,
/// e.g. "✓ × ×".
std::string capability_row(GateClass c);

/// Parameters of family_gate.
struct FamilyParameters {
  double eta = 0.0;
  double theta = 0.0;
  double omega = 0.0;
};

struct TaskCostReport {
  TimeBound cost = TimeBound::infeasible();
  AlphaVector optimal_beta;
  std::string gate_hint;
  std::optional<FamilyParameters> family;  // a family gate with that content
};

/// Cheapest interaction content for the task under the s-ordered `alpha`.
/// The cost is infeasible when alpha1 == 0.
TaskCostReport task_cost(CommTask task, const AlphaVector &alpha);

/// Special unitary mapping |00> -> |00>, |10> -> |01>, |01> -> |1 w>,
/// |11> -> |1 w_perp> (up to a common phase), with
/// |w> = cos(omega)|0> + e^{-i theta} sin(omega)|1> and
/// |w_perp> = e^{-i eta}(-sin(omega)|0> + e^{-i theta} cos(omega)|1>).
/// Returned in the |00>, |01>, |10>, |11> ordering.
GateMatrix family_gate(double eta, double theta, double omega);

}  // namespace gateforge
