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

#include <json.hpp>

#include "gateforge/protocol.hpp"
#include "gateforge/types.hpp"

namespace gateforge::cli {

using json = nlohmann::json;

/// Every number the CLI prints goes through this: 10 significant digits,
/// and 10 decimals for magnitudes of at least 1.
double round_sig(double x);

/// Angles of order one: roundoff below kAngleNoise prints as 0.
inline constexpr double kAngleNoise = 1e-14;
double round_angle(double x);

json to_json(double x);
json to_json(Complex z);  // [re, im]
json to_json(const AlphaVector &a);  // angles, via round_angle
json to_json(const LambdaVector &l);
json to_json(const Matrix2 &m);     // rows of [re, im]
json to_json(const GateMatrix &m);  // rows of [re, im]
json to_json(const LocalUnitaryPair &l);
json to_json(const CouplingMatrix &c);

/// {hamiltonian_alpha, [coupling], opening, segments, closing, global_phase,
/// total_time}; all numbers rounded.
json protocol_to_json(const Protocol &p);

// Parsers throw GateforgeError(InvalidInput) on malformed input.
double number_from_json(const json &j, const char *what);
Complex complex_from_json(const json &j);
AlphaVector alpha_from_json(const json &j);
Matrix2 matrix2_from_json(const json &j);
LocalUnitaryPair local_from_json(const json &j);
CouplingMatrix coupling_from_json(const json &j);  // 9 numbers or 3x3
/// Local factors must be unitary within `unitary_tolerance`; they are then
/// projected onto the nearest unitary and phases onto the unit circle.
Protocol protocol_from_json(const json &j, double unitary_tolerance);

}  // namespace gateforge::cli
