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

#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "gateforge/canonical.hpp"
#include "gateforge/error.hpp"
#include "gateforge/types.hpp"

namespace gateforge::testing {

/// Seeded generator for property tests. Every test picks its own fixed seed
/// so failures reproduce.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  double normal();
  int integer(int lo, int hi);

  /// Haar-distributed U(4).
  GateMatrix unitary4();
  /// Haar-distributed SU(4).
  GateMatrix special_unitary4();
  /// Haar-distributed SU(2).
  Matrix2 su2();
  LocalUnitaryPair local_pair();

  /// Random s-ordered Hamiltonian vector with alpha1 in (0, scale].
  AlphaVector s_ordered_alpha(double scale = 1.0);
  /// Uniform-ish point of the canonical region pi/4 >= b1 >= b2 >= |b3|.
  AlphaVector canonical_beta();
  /// Canonical beta also satisfying b1 + |b3| <= pi/4.
  AlphaVector in_region_beta();
  /// Random 3x3 coupling.
  CouplingMatrix coupling();

 private:
  std::mt19937_64 engine_;
};

/// max |a - b| over all entries.
double distance(const GateMatrix &a, const GateMatrix &b);
/// min over unit phases of max |a - phase b| (computed via the trace overlap).
double distance_up_to_phase(const GateMatrix &a, const GateMatrix &b);

/// Code of the GateforgeError thrown by f, or nothing if f returns normally.
std::optional<ErrorCode> error_code_of(const std::function<void()> &f);

}  // namespace gateforge::testing
