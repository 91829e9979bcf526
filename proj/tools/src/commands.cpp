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

#include "gateforge/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "gateforge/canonical.hpp"
#include "gateforge/comm.hpp"
#include "gateforge/cost.hpp"
#include "gateforge/protocol.hpp"

namespace gateforge::cli {

namespace {

[[noreturn]] void invalid(const std::string &what) {
  throw GateforgeError(ErrorCode::InvalidInput, what);
}

const json &require(const json &request, const char *key) {
  if (!request.contains(key)) invalid(std::string("missing \"") + key + "\"");
  return request[key];
}

bool flag(const json &request, const char *key) {
  if (!request.contains(key)) return false;
  if (!request[key].is_boolean()) invalid(std::string(key) + " must be true or false");
  return request[key].get<bool>();
}

std::string text(const json &request, const char *key) {
  const json &j = require(request, key);
  if (!j.is_string()) invalid(std::string(key) + " must be a string");
  return j.get<std::string>();
}

json time_json(const TimeBound &t) {
  return t.is_feasible() ? json(round_sig(t.value())) : json(nullptr);
}

json branch_json(const BranchShift &b) { return json::array({b[0], b[1], b[2]}); }

json report_json(const VerificationReport &r) {
  return {{"max_abs_error_up_to_phase", round_sig(r.max_abs_error_up_to_phase)},
          {"content_error", std::isfinite(r.content_error)
                                ? json(round_sig(r.content_error))
                                : json(nullptr)},
          {"total_time", round_sig(r.total_time)},
          {"passed", r.passed}};
}

json kak_json(const KakDecomposition &k) {
  return {{"post_local", to_json(k.post_local)},
          {"alpha", to_json(k.alpha)},
          {"pre_local", to_json(k.pre_local)},
          {"global_phase", to_json(k.global_phase)}};
}

double optional_tolerance(const json &request, double fallback) {
  if (!request.contains("tolerance")) return fallback;
  const double t = number_from_json(request["tolerance"], "tolerance");
  if (t < 0.0) invalid("tolerance must be nonnegative");
  return t;
}

CommandResult cmd_canon(const json &request, const Settings &settings) {
  const ResolvedGate gate = resolve_gate(require(request, "gate"), settings);
  CommandResult r;
  if (flag(request, "full")) {
    const KakDecomposition k = kak_decompose(gate.matrix);
    r.output["alpha"] = to_json(k.alpha);
    r.output["lambda"] = to_json(alpha_to_lambda(k.alpha));
    r.output["kak"] = kak_json(k);
  } else {
    const AlphaVector a = interaction_content(gate.matrix);
    r.output["alpha"] = to_json(a);
    r.output["lambda"] = to_json(alpha_to_lambda(a));
  }
  return r;
}

CommandResult cmd_cost(const json &request, const Settings &settings) {
  const ResolvedGate gate = resolve_gate(require(request, "gate"), settings);
  CommandResult r;
  const ResolvedHamiltonian ham = resolve_hamiltonian(request, r.warnings);
  const AlphaVector beta = interaction_content(gate.matrix);
  const CostReport c = interaction_cost(beta, ham.alpha);
  r.output = {{"cost", time_json(c.cost)},
              {"feasible", c.cost.is_feasible()},
              {"beta", to_json(beta)},
              {"hamiltonian_alpha", to_json(ham.alpha)}};
  if (c.cost.is_feasible()) {
    r.output["branch"] = branch_json(c.branch);
    r.output["beta_used"] = to_json(c.beta_used);
  } else {
    r.exit_code = kExitInfeasible;
  }
  return r;
}

CommandResult cmd_synth(const json &request, const Settings &settings) {
  const ResolvedGate gate = resolve_gate(require(request, "gate"), settings);
  CommandResult r;
  const ResolvedHamiltonian ham = resolve_hamiltonian(request, r.warnings);
  const Protocol p = ham.coupling
                         ? synthesize_from_coupling(gate.matrix, *ham.coupling)
                         : synthesize(gate.matrix, ham.alpha);

  // Report on the protocol exactly as written, so verify reproduces it.
  const json serialized = protocol_to_json(p);
  const Protocol reparsed =
      protocol_from_json(json::parse(serialized.dump()), settings.load_tolerance());
  const VerificationReport report =
      verify(reparsed, gate.matrix, default_verify_tolerance(settings));

  if (request.contains("out")) {
    const std::string path = text(request, "out");
    std::ofstream file(path);
    if (!file) invalid("cannot write '" + path + "'");
    file << serialized.dump(2) << '\n';
    if (!file) invalid("failed writing '" + path + "'");
    r.output["out"] = path;
  }
  r.output["protocol"] = serialized;
  r.output["segment_count"] = p.segments.size();
  r.output["total_time"] = round_sig(p.total_time());
  r.output["verification"] = report_json(report);
  if (!report.passed) r.exit_code = kExitInternal;
  return r;
}

CommandResult cmd_verify(const json &request, const Settings &settings) {
  const ResolvedGate gate = resolve_gate(require(request, "gate"), settings);
  json protocol;
  if (request.contains("protocol")) {
    protocol = request["protocol"];
  } else {
    const std::string path = text(request, "protocol_file");
    std::ifstream in(path);
    if (!in) invalid("cannot open '" + path + "'");
    try {
      protocol = json::parse(in);
    } catch (const json::parse_error &e) {
      invalid("'" + path + "' is not valid JSON: " + e.what());
    }
  }
  const Protocol p = protocol_from_json(protocol, settings.load_tolerance());
  const double tolerance =
      optional_tolerance(request, default_verify_tolerance(settings));
  const VerificationReport report = verify(p, gate.matrix, tolerance);
  CommandResult r;
  r.output = report_json(report);
  r.output["tolerance"] = round_sig(tolerance);
  r.exit_code = report.passed ? kExitOk : kExitInternal;
  return r;
}

CommandResult cmd_classify(const json &request, const Settings &settings) {
  const ResolvedGate gate = resolve_gate(require(request, "gate"), settings);
  const double tolerance =
      optional_tolerance(request, kClassTolerance * settings.tol_scale);
  const AlphaVector beta = interaction_content(gate.matrix);
  const GateClass c = classify(beta, tolerance);
  json caps = json::array();
  for (CommTask t : capabilities(c)) caps.push_back(std::string(to_string(t)));
  CommandResult r;
  r.output = {{"class", std::string(to_string(c))},
              {"row", capability_row(c)},
              {"capabilities", caps},
              {"beta", to_json(beta)}};
  return r;
}

CommandResult cmd_commcost(const json &request, const Settings &) {
  const CommTask task = parse_comm_task(text(request, "task"));
  CommandResult r;
  const ResolvedHamiltonian ham = resolve_hamiltonian(request, r.warnings);
  const TaskCostReport c = task_cost(task, ham.alpha);
  r.output = {{"task", std::string(to_string(task))},
              {"cost", time_json(c.cost)},
              {"feasible", c.cost.is_feasible()},
              {"optimal_beta", to_json(c.optimal_beta)},
              {"gate_hint", c.gate_hint},
              {"hamiltonian_alpha", to_json(ham.alpha)}};
  if (c.family) {
    r.output["family"] = {{"eta", round_sig(c.family->eta)},
                          {"theta", round_sig(c.family->theta)},
                          {"omega", round_sig(c.family->omega)}};
  }
  if (!c.cost.is_feasible()) r.exit_code = kExitInfeasible;
  return r;
}

CommandResult cmd_order(const json &request, const Settings &settings) {
  const ResolvedGate u = resolve_gate(require(request, "gate_u"), settings);
  const ResolvedGate v = resolve_gate(require(request, "gate_v"), settings);
  const AlphaVector beta_u = interaction_content(u.matrix);
  const AlphaVector beta_v = interaction_content(v.matrix);
  CommandResult r;
  r.output = {{"verdict", std::string(to_string(partial_order(beta_u, beta_v)))},
              {"beta_u", to_json(beta_u)},
              {"beta_v", to_json(beta_v)}};
  return r;
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Infeasible:
      return kExitInfeasible;
    case ErrorCode::DiagonalizationFailed:
    case ErrorCode::BranchResolutionFailed:
    case ErrorCode::NoTripleFound:
    case ErrorCode::NotMajorized:
    case ErrorCode::NotAProduct:
    case ErrorCode::ImproperRotation:
    case ErrorCode::SynthesisResidualTooLarge:
      return kExitInternal;
    case ErrorCode::NonUnitary:
    case ErrorCode::NotSymmetric:
    case ErrorCode::NegativeDuration:
    case ErrorCode::NotTraceless:
    case ErrorCode::UnknownGate:
    case ErrorCode::BetaOutOfRange:
    case ErrorCode::InvalidInput:
      return kExitValidation;
  }
  return kExitInternal;
}

double default_verify_tolerance(const Settings &settings) {
  return 1e-7 * settings.tol_scale;
}

CommandResult run_command(const json &request, const Settings &base) {
  if (!request.is_object()) invalid("a request must be a JSON object");
  Settings settings = base;
  if (flag(request, "degrees")) settings.degrees = true;
  const std::string command = text(request, "command");
  if (command == "canon") return cmd_canon(request, settings);
  if (command == "cost") return cmd_cost(request, settings);
  if (command == "synth") return cmd_synth(request, settings);
  if (command == "verify") return cmd_verify(request, settings);
  if (command == "classify") return cmd_classify(request, settings);
  if (command == "commcost") return cmd_commcost(request, settings);
  if (command == "order") return cmd_order(request, settings);
  invalid("unknown command '" + command + "'");
}

CommandResult run_request(const json &request, const Settings &settings) {
  auto failure = [](int code, const std::string &name, const std::string &msg) {
    CommandResult r;
    r.exit_code = code;
    r.output = {{"error", {{"code", name}, {"message", msg}}}};
    return r;
  };
  try {
    return run_command(request, settings);
  } catch (const GateforgeError &e) {
    return failure(exit_code_for(e.code()), std::string(to_string(e.code())),
                   e.what());
  } catch (const json::exception &e) {
    return failure(kExitValidation, "InvalidInput", e.what());
  } catch (const std::exception &e) {
    return failure(kExitInternal, "Internal", e.what());
  }
}

}  // namespace gateforge::cli
