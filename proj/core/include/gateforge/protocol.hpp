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
#include <vector>

#include "gateforge/canonical.hpp"
#include "gateforge/types.hpp"

namespace gateforge {

struct ProtocolSegment {
  LocalUnitaryPair local;  // applied before the drift
  double duration = 0.0;
};

/// global_phase * closing * prod_k (drift(t_k) * local_k) * opening, where the
/// drift is exp(-i H t) for H = H_alpha, or H_c when a coupling is present.
struct Protocol {
  LocalUnitaryPair opening;
  std::vector<ProtocolSegment> segments;
  LocalUnitaryPair closing;
  AlphaVector hamiltonian_alpha;
  std::optional<CouplingMatrix> coupling;
  Complex global_phase{1.0, 0.0};

  double total_time() const;
  /// Throws NegativeDuration.
  GateMatrix drift(double t) const;
  /// Canonical alpha of the drift generator (s-ordered).
  AlphaVector effective_alpha() const;
};

GateMatrix simulate(const Protocol &p);

/// Time-optimal protocol with at most three drift segments. `alpha` must be
/// s-ordered. Throws InvalidInput, NonUnitary, Infeasible,
/// SynthesisResidualTooLarge.
Protocol synthesize(const GateMatrix &target, const AlphaVector &alpha);

/// Same, with the drift given as a pure two-body coupling. The conjugator of
/// hamiltonian_canonical is folded into the segment locals.
Protocol synthesize_from_coupling(const GateMatrix &target,
                                  const CouplingMatrix &coupling);

struct VerificationReport {
  double max_abs_error_up_to_phase = 0.0;
  double content_error = 0.0;  // Euclidean distance of the contents
  double total_time = 0.0;
  bool passed = false;
};

VerificationReport verify(const Protocol &p, const GateMatrix &target,
                          double tolerance);

/// Samples the accumulated unitary at fractions 1/5, ..., 5/5 of every segment
/// and checks that its content is reachable in the elapsed time.
bool trajectory_check(const Protocol &p,
                      double tolerance = tol::kFactorization);

}  // namespace gateforge
