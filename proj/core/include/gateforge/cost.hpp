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
#include <string_view>

#include "gateforge/gates.hpp"
#include "gateforge/majorization.hpp"
#include "gateforge/types.hpp"

namespace gateforge {

/// Integer shift n: the target simulated is beta + (pi/2) n.
using BranchShift = std::array<int, 3>;

inline constexpr BranchShift kBranchZero{0, 0, 0};
inline constexpr BranchShift kBranchShifted{-1, 0, 0};

/// Returns the first n in {-2..2}^3 (lexicographic) with
/// beta + (pi/2) n s-majorized by alpha * t, or nothing.
std::optional<BranchShift> feasible(const AlphaVector &beta,
                                    const AlphaVector &alpha, double t,
                                    double tolerance = tol::kStructural);

struct CostReport {
  TimeBound cost = TimeBound::infeasible();
  BranchShift branch = kBranchZero;
  AlphaVector beta_used;  // s_order(beta + (pi/2) branch)
};

/// Minimal total interaction time for the gate with content `beta` under the
/// s-ordered Hamiltonian `alpha`. Ties go to branch (0,0,0).
CostReport interaction_cost(const AlphaVector &beta, const AlphaVector &alpha);

/// Closed-form costs. `beta` is the ControlledU parameter (0 <= beta <= pi/4).
/// Throws BetaOutOfRange, UnknownGate.
TimeBound named_gate_cost(NamedGate gate, const AlphaVector &alpha,
                          double beta = 0.0);

enum class OrderVerdict {
  MoreNonlocal,
  LessNonlocal,
  Equivalent,
  Incomparable,
  OutsideRegion,
};

std::string_view to_string(OrderVerdict v);

/// True if b1 + |b3| <= pi/4.
bool in_order_region(const AlphaVector &beta,
                     double tolerance = tol::kStructural);

/// Compares canonical contents; MoreNonlocal means u can simulate v in less
/// or equal time under every Hamiltonian.
OrderVerdict partial_order(const AlphaVector &beta_u,
                           const AlphaVector &beta_v);

}  // namespace gateforge
