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

#include "gateforge/comm.hpp"

#include <algorithm>
#include <cmath>

#include "gateforge/cost.hpp"
#include "gateforge/error.hpp"

namespace gateforge {

namespace {

bool at_quarter(double x, double tolerance) {
  return std::abs(std::abs(x) - kQuarterPi) <= tolerance;
}

}  // namespace

std::string_view to_string(GateClass c) {
  switch (c) {
    case GateClass::NoTransmission:
      return "NoTransmission";
    case GateClass::ClassCNOT:
      return "ClassCNOT";
    case GateClass::ClassDCNOT:
      return "ClassDCNOT";
    case GateClass::ClassSWAP:
      return "ClassSWAP";
  }
  return "Unknown";
}

std::string_view to_string(CommTask t) {
  switch (t) {
    case CommTask::CbitAtoB:
      return "CbitAtoB";
    case CommTask::CbitBothWays:
      return "CbitBothWays";
    case CommTask::QubitAtoB:
      return "QubitAtoB";
    case CommTask::QubitAtoBplusCbitBtoA:
      return "QubitAtoBplusCbitBtoA";
    case CommTask::QubitBothWays:
      return "QubitBothWays";
  }
  return "Unknown";
}

CommTask parse_comm_task(std::string_view name) {
  for (CommTask t : {CommTask::CbitAtoB, CommTask::CbitBothWays,
                     CommTask::QubitAtoB, CommTask::QubitAtoBplusCbitBtoA,
                     CommTask::QubitBothWays}) {
    if (to_string(t) == name) return t;
  }
  throw GateforgeError(ErrorCode::InvalidInput,
                       "unknown task '" + std::string(name) + "'");
}

GateClass classify(const AlphaVector &beta, double tolerance) {
  if (!at_quarter(beta[0], tolerance)) return GateClass::NoTransmission;
  if (!at_quarter(beta[1], tolerance)) return GateClass::ClassCNOT;
  if (!at_quarter(beta[2], tolerance)) return GateClass::ClassDCNOT;
  return GateClass::ClassSWAP;
}

std::vector<CommTask> capabilities(GateClass c) {
  switch (c) {
    case GateClass::NoTransmission:
      return {};
    case GateClass::ClassCNOT:
      return {CommTask::CbitAtoB};
    case GateClass::ClassDCNOT:
      return {CommTask::CbitAtoB, CommTask::CbitBothWays, CommTask::QubitAtoB,
              CommTask::QubitAtoBplusCbitBtoA};
    case GateClass::ClassSWAP:
      return {CommTask::CbitAtoB, CommTask::CbitBothWays, CommTask::QubitAtoB,
              CommTask::QubitAtoBplusCbitBtoA, CommTask::QubitBothWays};
  }
  return {};
}

std::string capability_row(GateClass c) {
  const auto caps = capabilities(c);
  auto mark = [&](CommTask t) {
    return std::find(caps.begin(), caps.end(), t) != caps.end() ? "✓" : "×";
  };
  return std::string(mark(CommTask::CbitAtoB)) + " " +
         mark(CommTask::QubitAtoBplusCbitBtoA) + " " +
         mark(CommTask::QubitBothWays);
}

TaskCostReport task_cost(CommTask task, const AlphaVector &alpha) {
  TaskCostReport r;
  switch (task) {
    case CommTask::CbitAtoB:
      r.optimal_beta = {kQuarterPi, 0.0, 0.0};
      r.gate_hint = "CNOT";
      break;
    case CommTask::CbitBothWays:
    case CommTask::QubitAtoB:
    case CommTask::QubitAtoBplusCbitBtoA: {
      const double s = alpha[0] + alpha[1];
      const double b = s > 0.0 ? alpha[2] / s : 0.0;
      r.optimal_beta = {kQuarterPi, kQuarterPi, kHalfPi * b};
      r.gate_hint = "family_gate";
      r.family = FamilyParameters{0.0, 0.0, kHalfPi - kPi * std::abs(b)};
      break;
    }
    case CommTask::QubitBothWays:
      r.optimal_beta = {kQuarterPi, kQuarterPi, kQuarterPi};
      r.gate_hint = "SWAP";
      break;
  }
  if (alpha[0] <= 0.0) return r;

  switch (task) {
    case CommTask::CbitAtoB:
      r.cost = TimeBound::finite(kQuarterPi / alpha[0]);
      break;
    case CommTask::CbitBothWays:
    case CommTask::QubitAtoB:
    case CommTask::QubitAtoBplusCbitBtoA:
      r.cost = TimeBound::finite(kHalfPi / (alpha[0] + alpha[1]));
      break;
    case CommTask::QubitBothWays:
      r.cost = named_gate_cost(NamedGate::SWAP, alpha);
      break;
  }
  return r;
}

GateMatrix family_gate(double eta, double theta, double omega) {
  const Complex pre = std::polar(1.0, -kQuarterPi + (eta + theta) / 4.0);
  const double c = std::cos(omega);
  const double s = std::sin(omega);
  // Rows and columns ordered |11>, |10>, |01>, |00>.
  GateMatrix f = GateMatrix::Zero();
  f(0, 0) = c * std::polar(1.0, -(eta + theta));
  f(0, 2) = std::polar(1.0, -theta) * s;
  f(1, 0) = -std::polar(1.0, -eta) * s;
  f(1, 2) = c;
  f(2, 1) = 1.0;
  f(3, 3) = 1.0;
  GateMatrix out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = pre * f(3 - i, 3 - j);
  return out;
}

}  // namespace gateforge
