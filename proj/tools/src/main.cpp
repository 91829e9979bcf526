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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "gateforge/cli/commands.hpp"

namespace {

using gateforge::cli::json;

struct GateOptions {
  std::string name;
  std::string matrix_file;
  std::string family;
  std::string basis_order;

  void add(CLI::App *app, const std::string &suffix = "") {
    auto *g = app->add_option("--gate" + suffix, name,
                              "named gate: CNOT, DCNOT, SWAP, IDENTITY, "
                              "CONTROLLED_U(beta)");
    auto *m = app->add_option("--matrix-file" + suffix, matrix_file,
                              "JSON file with a 4x4 unitary");
    if (suffix.empty()) {
      auto *f = app->add_option("--family", family,
                                "family gate parameters eta,theta,omega");
      g->excludes(m)->excludes(f);
      m->excludes(f);
      app->add_option("--basis-order", basis_order,
                      "basis order of --matrix-file: standard "
                      "(|00>,|01>,|10>,|11>) or reversed")
          ->check(CLI::IsMember({"standard", "reversed"}));
    } else {
      g->excludes(m);
    }
  }

  json spec() const {
    if (!name.empty()) return name;
    if (!matrix_file.empty()) {
      json j = {{"matrix_file", matrix_file}};
      if (!basis_order.empty()) j["basis_order"] = basis_order;
      return j;
    }
    if (!family.empty())
      return {{"family", gateforge::cli::parse_number_list(family)}};
    throw gateforge::GateforgeError(gateforge::ErrorCode::InvalidInput,
                                    "no gate given");
  }
};

struct HamiltonianOptions {
  std::string alpha;
  std::string coupling;

  void add(CLI::App *app) {
    auto *a = app->add_option("--alpha", alpha,
                              "interaction coefficients a1,a2,a3");
    auto *c = app->add_option("--coupling", coupling,
                              "3x3 coupling matrix, nine numbers row-major");
    a->excludes(c);
  }

  void fill(json &request) const {
    if (!alpha.empty())
      request["alpha"] = gateforge::cli::parse_number_list(alpha);
    if (!coupling.empty())
      request["coupling"] = gateforge::cli::parse_number_list(coupling);
  }
};

int emit(const gateforge::cli::CommandResult &r) {
  for (const auto &w : r.warnings) std::cerr << "warning: " << w << '\n';
  if (r.output.contains("error")) {
    std::cerr << "gateforge: " << r.output["error"]["message"].get<std::string>()
              << '\n';
  } else {
    std::cout << r.output.dump(2) << '\n';
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"gateforge: two-qubit gate canonicalization, interaction cost, "
               "time-optimal protocols"};
  app.require_subcommand(1);
  bool degrees = false;
  app.add_flag("--degrees", degrees, "read gate angles in degrees");

  GateOptions gate;
  HamiltonianOptions ham;

  auto *canon = app.add_subcommand("canon", "canonical interaction content");
  gate.add(canon);
  bool full = false;
  canon->add_flag("--full", full, "include the full KAK decomposition");

  auto *cost = app.add_subcommand("cost", "minimal interaction time");
  gate.add(cost);
  ham.add(cost);

  auto *synth = app.add_subcommand("synth", "time-optimal protocol");
  gate.add(synth);
  ham.add(synth);
  std::string out;
  synth->add_option("--out", out, "write the protocol to this JSON file");

  auto *verify = app.add_subcommand("verify", "check a protocol file");
  gate.add(verify);
  std::string protocol;
  verify->add_option("--protocol", protocol, "protocol JSON file")->required();
  double verify_tolerance = -1.0;
  verify->add_option("--tolerance", verify_tolerance,
                     "max entry error up to phase (default 1e-7)");

  auto *classify = app.add_subcommand("classify", "communication class");
  gate.add(classify);
  double class_tolerance = -1.0;
  classify->add_option("--tolerance", class_tolerance,
                       "distance from pi/4 that still counts (default 1e-9)");

  auto *commcost = app.add_subcommand("commcost", "cost of a communication task");
  std::string task;
  commcost->add_option("--task", task,
                       "CbitAtoB, CbitBothWays, QubitAtoB, "
                       "QubitAtoBplusCbitBtoA, QubitBothWays")
      ->required();
  ham.add(commcost);

  auto *order = app.add_subcommand("order", "compare two gates");
  GateOptions gate_v;
  gate.add(order, "-u");
  gate_v.add(order, "-v");

  auto *batch = app.add_subcommand("batch", "run JSON-lines requests");
  std::string batch_file;
  batch->add_option("file", batch_file, "JSON-lines file, or - for stdin")
      ->required();
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  batch->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  std::vector<std::string> warnings;
  gateforge::cli::Settings settings =
      gateforge::cli::settings_from_environment(warnings);
  settings.degrees = degrees;
  for (const auto &w : warnings) std::cerr << "warning: " << w << '\n';

  if (batch->parsed()) {
    if (batch_file == "-") {
      gateforge::cli::run_batch(std::cin, std::cout, settings, jobs);
      return 0;
    }
    std::ifstream in(batch_file);
    if (!in) {
      std::cerr << "gateforge: cannot open '" << batch_file << "'\n";
      return gateforge::cli::kExitValidation;
    }
    gateforge::cli::run_batch(in, std::cout, settings, jobs);
    return 0;
  }

  json request;
  try {
    if (canon->parsed()) {
      request = {{"command", "canon"}, {"gate", gate.spec()}, {"full", full}};
    } else if (cost->parsed()) {
      request = {{"command", "cost"}, {"gate", gate.spec()}};
      ham.fill(request);
    } else if (synth->parsed()) {
      request = {{"command", "synth"}, {"gate", gate.spec()}};
      ham.fill(request);
      if (!out.empty()) request["out"] = out;
    } else if (verify->parsed()) {
      request = {{"command", "verify"},
                 {"gate", gate.spec()},
                 {"protocol_file", protocol}};
      if (verify_tolerance >= 0.0) request["tolerance"] = verify_tolerance;
    } else if (classify->parsed()) {
      request = {{"command", "classify"}, {"gate", gate.spec()}};
      if (class_tolerance >= 0.0) request["tolerance"] = class_tolerance;
    } else if (commcost->parsed()) {
      request = {{"command", "commcost"}, {"task", task}};
      ham.fill(request);
    } else if (order->parsed()) {
      request = {{"command", "order"},
                 {"gate_u", gate.spec()},
                 {"gate_v", gate_v.spec()}};
    }
  } catch (const gateforge::GateforgeError &e) {
    std::cerr << "gateforge: " << e.what() << '\n';
    return gateforge::cli::kExitValidation;
  }
  return emit(gateforge::cli::run_request(request, settings));
}
