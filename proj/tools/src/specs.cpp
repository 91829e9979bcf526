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

#include "gateforge/cli/specs.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gateforge/comm.hpp"
#include "gateforge/error.hpp"
#include "gateforge/gates.hpp"
#include "gateforge/linalg.hpp"

namespace gateforge::cli {

namespace {

[[noreturn]] void invalid(const std::string &what) {
  throw GateforgeError(ErrorCode::InvalidInput, what);
}

double angle(double x, const Settings &settings) {
  return settings.degrees ? x * kPi / 180.0 : x;
}

std::string upper(std::string s) {
  for (char &c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

GateMatrix named_gate(const std::string &raw, const json *beta_field,
                      const Settings &settings) {
  std::string name = upper(raw);
  std::optional<double> beta;
  if (const auto open = name.find('('); open != std::string::npos) {
    if (name.back() != ')') invalid("malformed gate name '" + raw + "'");
    const std::string arg = name.substr(open + 1, name.size() - open - 2);
    char *end = nullptr;
    const double value = std::strtod(arg.c_str(), &end);
    if (arg.empty() || end != arg.c_str() + arg.size() || !std::isfinite(value))
      invalid("malformed gate parameter in '" + raw + "'");
    beta = value;
    name = name.substr(0, open);
  }
  if (beta_field != nullptr) beta = number_from_json(*beta_field, "beta");

  if (name == "CONTROLLED_U" || name == "CU") {
    if (!beta) invalid("CONTROLLED_U needs a phase, e.g. CONTROLLED_U(0.3)");
    return named_gate_matrix(NamedGate::ControlledU, angle(*beta, settings));
  }
  if (beta) invalid("only CONTROLLED_U takes a parameter");
  if (name == "CNOT") return cnot_gate();
  if (name == "DCNOT") return dcnot_gate();
  if (name == "SWAP") return swap_gate();
  if (name == "IDENTITY" || name == "I") return identity_gate();
  throw GateforgeError(ErrorCode::UnknownGate, "unknown gate '" + raw + "'");
}

json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) invalid("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    invalid("'" + path + "' is not valid JSON: " + e.what());
  }
}

GateMatrix reverse_basis(const GateMatrix &m) {
  GateMatrix out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = m(3 - i, 3 - j);
  return out;
}

// Nearest unitary in Frobenius norm (polar factor).
GateMatrix project_unitary(const GateMatrix &m) {
  Eigen::JacobiSVD<GateMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

GateMatrix matrix_gate(const json &spec, const Settings &settings) {
  GateMatrix m = matrix_from_json(spec["matrix"]);
  if (spec.contains("basis_order")) {
    const json &order = spec["basis_order"];
    if (!order.is_string()) invalid("basis_order must be a string");
    const std::string o = order.get<std::string>();
    if (o == "reversed") {
      m = reverse_basis(m);
    } else if (o != "standard") {
      invalid("basis_order must be \"standard\" or \"reversed\"");
    }
  }
  if (!is_unitary(m, settings.load_tolerance()))
    throw GateforgeError(ErrorCode::NonUnitary, "matrix is not unitary");
  return project_unitary(m);
}

GateMatrix family_spec(const json &f, const Settings &settings) {
  double p[3];
  if (f.is_array() && f.size() == 3) {
    for (std::size_t k = 0; k < 3; ++k) p[k] = number_from_json(f[k], "family");
  } else if (f.is_object()) {
    const char *keys[3] = {"eta", "theta", "omega"};
    for (int k = 0; k < 3; ++k) {
      if (!f.contains(keys[k])) invalid(std::string("family is missing ") + keys[k]);
      p[k] = number_from_json(f[keys[k]], keys[k]);
    }
  } else {
    invalid("family needs [eta, theta, omega]");
  }
  return family_gate(angle(p[0], settings), angle(p[1], settings),
                     angle(p[2], settings));
}

}  // namespace

Settings settings_from_environment(std::vector<std::string> &warnings) {
  Settings s;
  const char *raw = std::getenv("GATEFORGE_TOL");
  if (raw == nullptr || *raw == '\0') return s;
  char *end = nullptr;
  const double scale = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !std::isfinite(scale) || scale <= 0.0) {
    warnings.push_back(std::string("ignoring GATEFORGE_TOL='") + raw +
                       "' (needs a positive number)");
    return s;
  }
  s.tol_scale = scale;
  return s;
}

GateMatrix matrix_from_json(const json &j) {
  GateMatrix m;
  if (j.is_array() && j.size() == 16) {
    for (std::size_t k = 0; k < 16; ++k)
      m(static_cast<Eigen::Index>(k / 4), static_cast<Eigen::Index>(k % 4)) =
          complex_from_json(j[k]);
    return m;
  }
  if (j.is_array() && j.size() == 4) {
    for (std::size_t i = 0; i < 4; ++i) {
      if (!j[i].is_array() || j[i].size() != 4)
        invalid("a 4x4 matrix needs four rows of four entries");
      for (std::size_t k = 0; k < 4; ++k)
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
            complex_from_json(j[i][k]);
    }
    return m;
  }
  invalid("a gate matrix needs 16 entries or 4 rows of 4");
}

ResolvedGate resolve_gate(const json &spec, const Settings &settings) {
  if (spec.is_string()) {
    const std::string name = spec.get<std::string>();
    return {named_gate(name, nullptr, settings), name};
  }
  if (!spec.is_object()) invalid("gate must be a name or an object");
  if (spec.contains("name")) {
    if (!spec["name"].is_string()) invalid("gate name must be a string");
    const json *beta = spec.contains("beta") ? &spec["beta"] : nullptr;
    return {named_gate(spec["name"].get<std::string>(), beta, settings),
            spec["name"].get<std::string>()};
  }
  if (spec.contains("matrix")) return {matrix_gate(spec, settings), "matrix"};
  if (spec.contains("matrix_file")) {
    if (!spec["matrix_file"].is_string()) invalid("matrix_file must be a path");
    const std::string path = spec["matrix_file"].get<std::string>();
    json file = read_json_file(path);
    if (!file.is_object()) file = json{{"matrix", file}};
    if (!file.contains("matrix")) invalid("'" + path + "' holds no matrix");
    return {matrix_gate(file, settings), path};
  }
  if (spec.contains("family")) return {family_spec(spec["family"], settings), "family"};
  invalid("gate object needs one of name, matrix, matrix_file, family");
}

ResolvedHamiltonian resolve_hamiltonian(const json &request,
                                        std::vector<std::string> &warnings) {
  const bool has_alpha = request.contains("alpha");
  const bool has_coupling = request.contains("coupling");
  if (has_alpha == has_coupling)
    invalid("give exactly one of alpha or coupling");
  ResolvedHamiltonian h;
  if (has_alpha) {
    const AlphaVector raw = alpha_from_json(request["alpha"]);
    h.alpha = s_order(raw).alpha;
    if (!(h.alpha == raw)) {
      std::ostringstream msg;
      msg << "alpha reordered to s-order (" << h.alpha[0] << ", " << h.alpha[1]
          << ", " << h.alpha[2] << ")";
      warnings.push_back(msg.str());
    }
    return h;
  }
  const CouplingMatrix c = coupling_from_json(request["coupling"]);
  h.alpha = hamiltonian_canonical(c).alpha;
  h.coupling = c;
  return h;
}

std::vector<double> parse_number_list(const std::string &text) {
  std::string s = text;
  for (char &c : s)
    if (c == ',' || c == '[' || c == ']') c = ' ';
  std::istringstream in(s);
  std::vector<double> out;
  std::string token;
  while (in >> token) {
    char *end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || !std::isfinite(v))
      invalid("'" + text + "' is not a list of numbers");
    out.push_back(v);
  }
  return out;
}

}  // namespace gateforge::cli
