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

#include <iosfwd>
#include <string>
#include <vector>

#include "gateforge/cli/json_io.hpp"
#include "gateforge/cli/specs.hpp"
#include "gateforge/error.hpp"

namespace gateforge::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitInfeasible = 2,
  kExitInternal = 3,
};

int exit_code_for(ErrorCode code);

struct CommandResult {
  json output;
  int exit_code = kExitOk;
  std::vector<std::string> warnings;
};

/// Runs one request object, e.g.
///   {"command": "cost", "gate": "SWAP", "alpha": [1, 1, 1]}
/// Keys by command:
///   canon     gate, [full]
///   cost      gate, alpha | coupling
///   synth     gate, alpha | coupling, [out]
///   verify    gate, protocol | protocol_file, [tolerance]
///   classify  gate, [tolerance]
///   commcost  task, alpha | coupling
///   order     gate_u, gate_v
/// A "degrees": true key reads gate angles in degrees. Library and parse
/// errors propagate as exceptions; use run_request for a total function.
CommandResult run_command(const json &request, const Settings &settings);

/// Like run_command but never throws: failures become
/// {"error": {"code": .., "message": ..}} with the matching exit code.
CommandResult run_request(const json &request, const Settings &settings);

/// Reads JSON-lines requests and writes one result line per nonblank input
/// line, in input order:
///   {"line": n, "ok": true, "exit_code": 0, "result": {..}, "warnings": [..]}
///   {"line": n, "ok": false, "exit_code": 1, "error": {..}, "warnings": [..]}
/// Lines are evaluated concurrently on up to `jobs` threads.
void run_batch(std::istream &in, std::ostream &out, const Settings &settings,
               unsigned jobs);

/// Default tolerance of the verify command: 1e-7 scaled by GATEFORGE_TOL.
double default_verify_tolerance(const Settings &settings);

}  // namespace gateforge::cli
