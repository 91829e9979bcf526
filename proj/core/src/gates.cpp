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

#include "gateforge/gates.hpp"

namespace gateforge {

namespace {

GateMatrix permutation_gate(const int (&image)[4]) {
  GateMatrix g = GateMatrix::Zero();
  for (int col = 0; col < 4; ++col) g(image[col], col) = 1.0;
  return g;
}

}  // namespace

GateMatrix cnot_gate() { return permutation_gate({0, 1, 3, 2}); }

GateMatrix dcnot_gate() {
  // |00> -> |00>, |01> -> |11>, |10> -> |01>, |11> -> |10>
  return permutation_gate({0, 3, 1, 2});
}

GateMatrix swap_gate() { return permutation_gate({0, 2, 1, 3}); }

GateMatrix identity_gate() { return GateMatrix::Identity(); }

GateMatrix controlled_u_gate(double beta) {
  GateMatrix g = GateMatrix::Identity();
  g(2, 2) = std::polar(1.0, -2.0 * beta);
  g(3, 3) = std::polar(1.0, 2.0 * beta);
  return g;
}

GateMatrix controlled_phase_gate(double phi) {
  GateMatrix g = GateMatrix::Identity();
  g(3, 3) = std::polar(1.0, phi);
  return g;
}

std::string_view to_string(NamedGate g) {
  switch (g) {
    case NamedGate::Identity:
      return "IDENTITY";
    case NamedGate::CNOT:
      return "CNOT";
    case NamedGate::DCNOT:
      return "DCNOT";
    case NamedGate::SWAP:
      return "SWAP";
    case NamedGate::ControlledU:
      return "CONTROLLED_U";
  }
  return "UNKNOWN";
}

GateMatrix named_gate_matrix(NamedGate g, double beta) {
  switch (g) {
    case NamedGate::Identity:
      return identity_gate();
    case NamedGate::CNOT:
      return cnot_gate();
    case NamedGate::DCNOT:
      return dcnot_gate();
    case NamedGate::SWAP:
      return swap_gate();
    case NamedGate::ControlledU:
      return controlled_u_gate(beta);
  }
  return identity_gate();
}

}  // namespace gateforge
