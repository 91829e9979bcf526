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

#include "gateforge/cli/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "gateforge/error.hpp"
#include "gateforge/linalg.hpp"

namespace gateforge::cli {

namespace {

[[noreturn]] void invalid(const std::string &what) {
  throw GateforgeError(ErrorCode::InvalidInput, what);
}

Matrix2 project_unitary(const Matrix2 &m, double tolerance) {
  if (!is_unitary(m, tolerance))
    throw GateforgeError(ErrorCode::NonUnitary, "protocol local is not unitary");
  Eigen::JacobiSVD<Matrix2> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

Complex unit_phase(Complex z, double tolerance) {
  if (std::abs(std::abs(z) - 1.0) > tolerance)
    throw GateforgeError(ErrorCode::NonUnitary, "phase must have modulus 1");
  return z / std::abs(z);
}

LocalUnitaryPair checked_local(const json &j, double tolerance) {
  LocalUnitaryPair l = local_from_json(j);
  return {project_unitary(l.u_a, tolerance), project_unitary(l.u_b, tolerance),
          unit_phase(l.phase, tolerance)};
}

}  // namespace

double round_sig(double x) {
  if (!std::isfinite(x)) return x;
  if (x == 0.0) return 0.0;
  char buf[512];
  // Ten significant digits, and never fewer than ten decimals.
  if (std::abs(x) >= 1.0) {
    std::snprintf(buf, sizeof buf, "%.10f", x);
  } else {
    std::snprintf(buf, sizeof buf, "%.10g", x);
  }
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no negative zero in output
}

double round_angle(double x) {
  return std::abs(x) <= kAngleNoise ? 0.0 : round_sig(x);
}

json to_json(double x) { return round_sig(x); }

json to_json(Complex z) {
  return json::array({round_sig(z.real()), round_sig(z.imag())});
}

json to_json(const AlphaVector &a) {
  return json::array({round_angle(a[0]), round_angle(a[1]), round_angle(a[2])});
}

json to_json(const LambdaVector &l) {
  json out = json::array();
  for (std::size_t k = 0; k < 4; ++k) out.push_back(round_angle(l[k]));
  return out;
}

json to_json(const Matrix2 &m) {
  json rows = json::array();
  for (int i = 0; i < 2; ++i)
    rows.push_back(json::array({to_json(m(i, 0)), to_json(m(i, 1))}));
  return rows;
}

json to_json(const GateMatrix &m) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const LocalUnitaryPair &l) {
  return {{"u_a", to_json(l.u_a)}, {"u_b", to_json(l.u_b)},
          {"phase", to_json(l.phase)}};
}

json to_json(const CouplingMatrix &c) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i)
    rows.push_back(json::array(
        {round_sig(c(i, 0)), round_sig(c(i, 1)), round_sig(c(i, 2))}));
  return rows;
}

json protocol_to_json(const Protocol &p) {
  json out;
  out["hamiltonian_alpha"] = to_json(p.hamiltonian_alpha);
  if (p.coupling) out["coupling"] = to_json(*p.coupling);
  out["opening"] = to_json(p.opening);
  json segments = json::array();
  for (const auto &s : p.segments) {
    json seg = to_json(s.local);
    seg["duration"] = round_sig(s.duration);
    segments.push_back(seg);
  }
  out["segments"] = segments;
  out["closing"] = to_json(p.closing);
  out["global_phase"] = to_json(p.global_phase);
  out["total_time"] = round_sig(p.total_time());
  return out;
}

double number_from_json(const json &j, const char *what) {
  if (!j.is_number()) invalid(std::string(what) + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) invalid(std::string(what) + " must be finite");
  return x;
}

Complex complex_from_json(const json &j) {
  if (j.is_number()) return {number_from_json(j, "matrix entry"), 0.0};
  if (!j.is_array() || j.size() != 2)
    invalid("complex numbers are written as [re, im]");
  return {number_from_json(j[0], "real part"),
          number_from_json(j[1], "imaginary part")};
}

AlphaVector alpha_from_json(const json &j) {
  if (!j.is_array() || j.size() != 3) invalid("alpha needs three numbers");
  return {number_from_json(j[0], "alpha"), number_from_json(j[1], "alpha"),
          number_from_json(j[2], "alpha")};
}

Matrix2 matrix2_from_json(const json &j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() ||
      j[0].size() != 2 || !j[1].is_array() || j[1].size() != 2) {
    invalid("2x2 matrices are written as two rows of two [re, im] entries");
  }
  Matrix2 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          complex_from_json(j[i][k]);
  return m;
}

LocalUnitaryPair local_from_json(const json &j) {
  if (!j.is_object() || !j.contains("u_a") || !j.contains("u_b"))
    invalid("local pairs need u_a and u_b");
  LocalUnitaryPair l;
  l.u_a = matrix2_from_json(j["u_a"]);
  l.u_b = matrix2_from_json(j["u_b"]);
  l.phase = j.contains("phase") ? complex_from_json(j["phase"])
                                : Complex{1.0, 0.0};
  return l;
}

CouplingMatrix coupling_from_json(const json &j) {
  CouplingMatrix c;
  if (j.is_array() && j.size() == 9) {
    for (std::size_t k = 0; k < 9; ++k)
      c(static_cast<Eigen::Index>(k / 3), static_cast<Eigen::Index>(k % 3)) =
          number_from_json(j[k], "coupling");
    return c;
  }
  if (j.is_array() && j.size() == 3) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (!j[i].is_array() || j[i].size() != 3) break;
      for (std::size_t k = 0; k < 3; ++k)
        c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
            number_from_json(j[i][k], "coupling");
      if (i == 2) return c;
    }
  }
  invalid("coupling needs 9 numbers (row-major) or a 3x3 array");
}

Protocol protocol_from_json(const json &j, double unitary_tolerance) {
  if (!j.is_object()) invalid("a protocol must be a JSON object");
  for (const char *key : {"hamiltonian_alpha", "opening", "segments", "closing"})
    if (!j.contains(key)) invalid(std::string("protocol is missing ") + key);
  Protocol p;
  p.hamiltonian_alpha = alpha_from_json(j["hamiltonian_alpha"]);
  if (j.contains("coupling") && !j["coupling"].is_null())
    p.coupling = coupling_from_json(j["coupling"]);
  p.opening = checked_local(j["opening"], unitary_tolerance);
  if (!j["segments"].is_array()) invalid("segments must be an array");
  for (const json &s : j["segments"]) {
    ProtocolSegment seg;
    seg.local = checked_local(s, unitary_tolerance);
    if (!s.contains("duration")) invalid("segment is missing duration");
    seg.duration = number_from_json(s["duration"], "duration");
    if (seg.duration < 0.0) {
      throw GateforgeError(ErrorCode::NegativeDuration,
                           "segment durations must be nonnegative");
    }
    p.segments.push_back(seg);
  }
  p.closing = checked_local(j["closing"], unitary_tolerance);
  p.global_phase = j.contains("global_phase")
                       ? unit_phase(complex_from_json(j["global_phase"]),
                                    unitary_tolerance)
                       : Complex{1.0, 0.0};
  return p;
}

}  // namespace gateforge::cli
