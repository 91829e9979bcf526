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

#include "gateforge/protocol.hpp"

#include <cmath>
#include <limits>

#include "gateforge/cost.hpp"
#include "gateforge/error.hpp"
#include "gateforge/linalg.hpp"
#include "gateforge/majorization.hpp"

namespace gateforge {

namespace {

constexpr double kDropDuration = 1e-12;
constexpr double kSynthesisResidual = 1e-7;
constexpr int kTrajectorySamples = 5;

// -i sigma_x (x) sigma_x: U_beta == U_(beta - (pi/2, 0, 0)) * this.
LocalUnitaryPair branch_shift_local() {
  return {pauli(1), pauli(1), Complex{0.0, -1.0}};
}

RealOrthogonal4 permutation_matrix(const Permutation &perm) {
  RealOrthogonal4 p = RealOrthogonal4::Zero();
  for (int j = 0; j < 4; ++j) p(j, perm[static_cast<std::size_t>(j)]) = 1.0;
  // P diag(l) P^T does not see the sign of a row.
  if (p.determinant() < 0.0) p.row(0) *= -1.0;
  return p;
}

GateMatrix coupling_drift(const CouplingMatrix &c, double t) {
  const Eigen::SelfAdjointEigenSolver<GateMatrix> es(coupling_hamiltonian(c));
  Eigen::Vector4cd d;
  for (int k = 0; k < 4; ++k) d(k) = std::polar(1.0, -es.eigenvalues()(k) * t);
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double Protocol::total_time() const {
  double t = 0.0;
  for (const auto &s : segments) t += s.duration;
  return t;
}

GateMatrix Protocol::drift(double t) const {
  if (t < 0.0) {
    throw GateforgeError(ErrorCode::NegativeDuration,
                         "drift duration must be nonnegative");
  }
  if (coupling) return coupling_drift(*coupling, t);
  return drift_exponential(alpha_to_lambda(hamiltonian_alpha), t);
}

AlphaVector Protocol::effective_alpha() const {
  if (coupling) return hamiltonian_canonical(*coupling).alpha;
  return s_order(hamiltonian_alpha).alpha;
}

GateMatrix simulate(const Protocol &p) {
  GateMatrix u = p.opening.matrix();
  for (const auto &s : p.segments) u = p.drift(s.duration) * s.local.matrix() * u;
  return p.global_phase * p.closing.matrix() * u;
}

Protocol synthesize(const GateMatrix &target, const AlphaVector &alpha) {
  if (!is_s_ordered(alpha, 0.0)) {
    throw GateforgeError(ErrorCode::InvalidInput,
                         "Hamiltonian alpha must be s-ordered");
  }
  const KakDecomposition kak = kak_decompose(target);
  const CostReport report = interaction_cost(kak.alpha, alpha);
  if (!report.cost.is_feasible()) {
    throw GateforgeError(ErrorCode::Infeasible,
                         "the Hamiltonian cannot generate this gate");
  }
  const double t_s = report.cost.value();

  Protocol p;
  p.hamiltonian_alpha = alpha;
  p.global_phase = kak.global_phase;
  LocalUnitaryPair opening = kak.pre_local;
  if (report.branch == kBranchShifted) opening = branch_shift_local() * opening;
  p.opening = opening;

  std::vector<LocalUnitaryPair> conj;
  std::vector<double> weights;
  if (t_s > kDropDuration) {
    const AlphaVector target_beta{kak.alpha[0] + kHalfPi * report.branch[0],
                                  kak.alpha[1] + kHalfPi * report.branch[1],
                                  kak.alpha[2] + kHalfPi * report.branch[2]};
    const PermutationWeighting w = birkhoff_express(
        alpha_to_lambda(target_beta), alpha_to_lambda(alpha), t_s);
    for (const auto &term : w.terms) {
      if (term.weight * t_s < kDropDuration) continue;
      conj.push_back(so4_to_local(permutation_matrix(term.perm)));
      weights.push_back(term.weight);
    }
  }
  double weight_sum = 0.0;
  for (double x : weights) weight_sum += x;

  LocalUnitaryPair previous = LocalUnitaryPair::identity();
  for (std::size_t i = 0; i < conj.size(); ++i) {
    p.segments.push_back(
        {conj[i].adjoint() * previous, t_s * weights[i] / weight_sum});
    previous = conj[i];
  }
  p.closing = kak.post_local * previous;

  const double residual = max_abs(GateMatrix(simulate(p) - target));
  if (residual > kSynthesisResidual) {
    throw GateforgeError(ErrorCode::SynthesisResidualTooLarge,
                         "synthesized protocol misses the target by " +
                             std::to_string(residual));
  }
  return p;
}

Protocol synthesize_from_coupling(const GateMatrix &target,
                                  const CouplingMatrix &coupling) {
  const HamiltonianCanonicalForm hc = hamiltonian_canonical(coupling);
  Protocol p = synthesize(target, hc.alpha);
  const LocalUnitaryPair &w = hc.conjugator;
  for (std::size_t i = 0; i < p.segments.size(); ++i) {
    auto &local = p.segments[i].local;
    local = i == 0 ? w.adjoint() * local : w.adjoint() * local * w;
  }
  if (!p.segments.empty()) p.closing = p.closing * w;
  p.coupling = coupling;

  const double residual = max_abs(GateMatrix(simulate(p) - target));
  if (residual > kSynthesisResidual) {
    throw GateforgeError(ErrorCode::SynthesisResidualTooLarge,
                         "synthesized protocol misses the target by " +
                             std::to_string(residual));
  }
  return p;
}

VerificationReport verify(const Protocol &p, const GateMatrix &target,
                          double tolerance) {
  VerificationReport r;
  r.total_time = p.total_time();
  const GateMatrix s = simulate(p);
  const Complex overlap = (target.adjoint() * s).trace();
  const Complex phase =
      std::abs(overlap) > 1e-14 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
  r.max_abs_error_up_to_phase = max_abs(GateMatrix(s - phase * target));
  try {
    r.content_error =
        (interaction_content(s) - interaction_content(target)).norm();
  } catch (const GateforgeError &) {
    r.content_error = std::numeric_limits<double>::infinity();
  }
  r.passed = r.max_abs_error_up_to_phase <= tolerance;
  return r;
}

bool trajectory_check(const Protocol &p, double tolerance) {
  const AlphaVector alpha = p.effective_alpha();
  GateMatrix u = p.opening.matrix();
  double elapsed = 0.0;
  for (const auto &s : p.segments) {
    u = s.local.matrix() * u;
    for (int k = 1; k <= kTrajectorySamples; ++k) {
      const double dt = s.duration * k / kTrajectorySamples;
      const AlphaVector gamma = interaction_content(p.drift(dt) * u);
      if (!feasible(gamma, alpha, elapsed + dt, tolerance)) return false;
    }
    u = p.drift(s.duration) * u;
    elapsed += s.duration;
  }
  return true;
}

}  // namespace gateforge
