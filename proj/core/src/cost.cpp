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

#include "gateforge/cost.hpp"

#include <cmath>

#include "gateforge/canonical.hpp"
#include "gateforge/error.hpp"

namespace gateforge {

namespace {

AlphaVector shifted(const AlphaVector &beta, const BranchShift &n) {
  return {beta[0] + kHalfPi * n[0], beta[1] + kHalfPi * n[1],
          beta[2] + kHalfPi * n[2]};
}

TimeBound ratio(double numerator, double denominator) {
  if (denominator <= 0.0) {
    return numerator == 0.0 ? TimeBound::finite(0.0) : TimeBound::infeasible();
  }
  return TimeBound::finite(numerator / denominator);
}

}  // namespace

std::optional<BranchShift> feasible(const AlphaVector &beta,
                                    const AlphaVector &alpha, double t,
                                    double tolerance) {
  const AlphaVector at = alpha.scaled(t);
  BranchShift n{};
  for (n[0] = -2; n[0] <= 2; ++n[0])
    for (n[1] = -2; n[1] <= 2; ++n[1])
      for (n[2] = -2; n[2] <= 2; ++n[2])
        if (s_majorizes(at, shifted(beta, n), tolerance)) return n;
  return std::nullopt;
}

CostReport interaction_cost(const AlphaVector &beta, const AlphaVector &alpha) {
  CostReport best;
  best.branch = kBranchZero;
  best.beta_used = s_order(beta).alpha;
  best.cost = min_time(best.beta_used, alpha);

  const AlphaVector alt = s_order(shifted(beta, kBranchShifted)).alpha;
  const TimeBound alt_cost = min_time(alt, alpha);
  if (alt_cost < best.cost) {
    best.branch = kBranchShifted;
    best.beta_used = alt;
    best.cost = alt_cost;
  }
  return best;
}

TimeBound named_gate_cost(NamedGate gate, const AlphaVector &alpha,
                          double beta) {
  switch (gate) {
    case NamedGate::Identity:
      return TimeBound::finite(0.0);
    case NamedGate::CNOT:
      return ratio(kQuarterPi, alpha[0]);
    case NamedGate::DCNOT:
      return ratio(kHalfPi, alpha[0] + alpha[1] - std::abs(alpha[2]));
    case NamedGate::SWAP:
      return ratio(3.0 * kQuarterPi, alpha[0] + alpha[1] + std::abs(alpha[2]));
    case NamedGate::ControlledU:
      if (!(beta >= 0.0 && beta <= kQuarterPi)) {
        throw GateforgeError(ErrorCode::BetaOutOfRange,
                             "controlled-U parameter must lie in [0, pi/4]");
      }
      return ratio(beta, alpha[0]);
  }
  throw GateforgeError(ErrorCode::UnknownGate, "unrecognised named gate");
}

std::string_view to_string(OrderVerdict v) {
  switch (v) {
    case OrderVerdict::MoreNonlocal:
      return "MoreNonlocal";
    case OrderVerdict::LessNonlocal:
      return "LessNonlocal";
    case OrderVerdict::Equivalent:
      return "Equivalent";
    case OrderVerdict::Incomparable:
      return "Incomparable";
    case OrderVerdict::OutsideRegion:
      return "OutsideRegion";
  }
  return "Unknown";
}

bool in_order_region(const AlphaVector &beta, double tolerance) {
  return beta[0] + std::abs(beta[2]) <= kQuarterPi + tolerance;
}

OrderVerdict partial_order(const AlphaVector &beta_u,
                           const AlphaVector &beta_v) {
  if (!in_order_region(beta_u) || !in_order_region(beta_v))
    return OrderVerdict::OutsideRegion;
  const bool u_covers_v = s_majorizes(beta_u, beta_v);
  const bool v_covers_u = s_majorizes(beta_v, beta_u);
  if (u_covers_v && v_covers_u) return OrderVerdict::Equivalent;
  if (u_covers_v) return OrderVerdict::MoreNonlocal;
  if (v_covers_u) return OrderVerdict::LessNonlocal;
  return OrderVerdict::Incomparable;
}

}  // namespace gateforge
