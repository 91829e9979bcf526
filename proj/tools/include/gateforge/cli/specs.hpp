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

#include <optional>
#include <string>
#include <vector>

#include "gateforge/canonical.hpp"
#include "gateforge/cli/json_io.hpp"
#include "gateforge/types.hpp"

namespace gateforge::cli {

/// Per-invocation options shared by every command.
struct Settings {
  double tol_scale = 1.0;  // GATEFORGE_TOL
  bool degrees = false;    // gate angles given in degrees

  double load_tolerance() const { return tol::kFactorization * tol_scale; }
};

/// Reads GATEFORGE_TOL. Unset gives 1; an unusable value gives 1 and a
/// warning.
Settings settings_from_environment(std::vector<std::string> &warnings);

struct ResolvedGate {
  GateMatrix matrix;
  std::string label;
};

/// Accepted forms:
///   "CNOT", "DCNOT", "SWAP", "IDENTITY", "CONTROLLED_U(0.3)"
///   {"name": "CONTROLLED_U", "beta": 0.3}
///   {"matrix": 16 [re, im] entries or 4 rows, "basis_order": "reversed"}
///   {"matrix_file": "g.json"} (the file holds a matrix or a matrix object)
///   {"family": [eta, theta, omega]} or {"family": {"eta": .., ...}}
/// Matrices are in |00>,|01>,|10>,|11> order unless basis_order is
/// "reversed" (|11>,|10>,|01>,|00>). They must be unitary within the load
/// tolerance and are then projected onto the nearest unitary.
ResolvedGate resolve_gate(const json &spec, const Settings &settings);

/// Loose parse of a 4x4 matrix in the formats resolve_gate accepts.
GateMatrix matrix_from_json(const json &j);

struct ResolvedHamiltonian {
  AlphaVector alpha;                      // s-ordered
  std::optional<CouplingMatrix> coupling;
};

/// Reads "alpha" (s-ordered, with a warning if that changed it) or
/// "coupling" (routed through hamiltonian_canonical) from a request.
ResolvedHamiltonian resolve_hamiltonian(const json &request,
                                        std::vector<std::string> &warnings);

/// "1,0,0" or "1 0 0" -> [1, 0, 0].
std::vector<double> parse_number_list(const std::string &text);

}  // namespace gateforge::cli
