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

#include "gateforge/types.hpp"

#include <algorithm>
#include <cmath>

#include "gateforge/error.hpp"
#include "gateforge/linalg.hpp"

namespace gateforge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonUnitary:
      return "NonUnitary";
    case ErrorCode::NotSymmetric:
      return "NotSymmetric";
    case ErrorCode::DiagonalizationFailed:
      return "DiagonalizationFailed";
    case ErrorCode::NotAProduct:
      return "NotAProduct";
    case ErrorCode::ImproperRotation:
      return "ImproperRotation";
    case ErrorCode::NegativeDuration:
      return "NegativeDuration";
    case ErrorCode::NotTraceless:
      return "NotTraceless";
    case ErrorCode::BranchResolutionFailed:
      return "BranchResolutionFailed";
    case ErrorCode::NotMajorized:
      return "NotMajorized";
    case ErrorCode::NoTripleFound:
      return "NoTripleFound";
    case ErrorCode::UnknownGate:
      return "UnknownGate";
    case ErrorCode::BetaOutOfRange:
      return "BetaOutOfRange";
    case ErrorCode::Infeasible:
      return "Infeasible";
    case ErrorCode::SynthesisResidualTooLarge:
      return "SynthesisResidualTooLarge";
    case ErrorCode::InvalidInput:
      return "InvalidInput";
  }
  return "Unknown";
}

double AlphaVector::max_abs_diff(const AlphaVector &o) const {
  double d = 0.0;
  for (std::size_t i = 0; i < 3; ++i) d = std::max(d, std::abs(v[i] - o[i]));
  return d;
}

double AlphaVector::norm() const {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

bool AlphaVector::is_zero(double tolerance) const {
  return std::abs(v[0]) <= tolerance && std::abs(v[1]) <= tolerance &&
         std::abs(v[2]) <= tolerance;
}

double LambdaVector::max_abs_diff(const LambdaVector &o) const {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(v[i] - o[i]));
  return d;
}

GateMatrix LocalUnitaryPair::matrix() const {
  return phase * kron(u_a, u_b);
}

LocalUnitaryPair LocalUnitaryPair::adjoint() const {
  return {u_a.adjoint(), u_b.adjoint(), std::conj(phase)};
}

LocalUnitaryPair operator*(const LocalUnitaryPair &lhs,
                           const LocalUnitaryPair &rhs) {
  return {lhs.u_a * rhs.u_a, lhs.u_b * rhs.u_b, lhs.phase * rhs.phase};
}

}  // namespace gateforge
