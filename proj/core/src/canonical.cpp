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

#include "gateforge/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "gateforge/error.hpp"
#include "gateforge/linalg.hpp"

namespace gateforge {

namespace {

// Weyl-chamber boundary a1 == pi/4 is recognised within this distance.
constexpr double kBoundaryTolerance = 1e-10;
// Eigenphase matching in kak_decompose.
constexpr double kSpectrumMatchTolerance = 1e-6;

int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

double reduce_quarter(double x) {
  double r = std::remainder(x, kHalfPi);
  if (r <= -kQuarterPi) r += kHalfPi;
  return r;
}

struct ContentAnalysis {
  SpecialNormalized normalized;
  GateMatrix magic;
  SymmetricUnitaryEigen eigen;
  AlphaVector alpha;
};

ContentAnalysis analyze(const GateMatrix &g) {
  ContentAnalysis out;
  out.normalized = special_normalize(g);
  out.magic = to_magic(out.normalized.special);
  out.eigen = joint_diagonalize_symmetric_unitary(
      GateMatrix(out.magic.transpose() * out.magic));

  std::array<double, 4> base{};
  for (std::size_t k = 0; k < 4; ++k) base[k] = -0.5 * out.eigen.phases[k];

  std::optional<AlphaVector> best;
  std::array<int, 4> off{};
  for (off[0] = -1; off[0] <= 1; ++off[0]) {
    for (off[1] = -1; off[1] <= 1; ++off[1]) {
      for (off[2] = -1; off[2] <= 1; ++off[2]) {
        for (off[3] = -1; off[3] <= 1; ++off[3]) {
          LambdaVector l;
          for (std::size_t k = 0; k < 4; ++k) l[k] = base[k] + kPi * off[k];
          if (std::abs(l.sum()) > 1e-6) continue;
          // Remove the residual roundoff so lambda_to_alpha sees an exactly
          // traceless vector.
          const double mean = l.sum() / 4.0;
          for (std::size_t k = 0; k < 4; ++k) l[k] -= mean;
          const AlphaVector cand = canonical_reduce(lambda_to_alpha(l));
          if (!best || best->v < cand.v) best = cand;
        }
      }
    }
  }
  if (!best) {
    throw GateforgeError(ErrorCode::BranchResolutionFailed,
                         "no traceless eigenvalue branch found");
  }
  out.alpha = *best;
  return out;
}

// Nearest proper orthogonal matrix (polar factor).
RealOrthogonal4 orthonormalize(const RealMatrix4 &m) {
  const Eigen::JacobiSVD<RealMatrix4> svd(m,
                                          Eigen::ComputeFullU |
                                              Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().transpose();
}

}  // namespace

LambdaVector alpha_to_lambda(const AlphaVector &a) {
  return {a[0] + a[1] - a[2], a[0] - a[1] + a[2], -a[0] + a[1] + a[2],
          -a[0] - a[1] - a[2]};
}

AlphaVector lambda_to_alpha(const LambdaVector &l) {
  if (std::abs(l.sum()) > 1e-9) {
    throw GateforgeError(ErrorCode::NotTraceless,
                         "lambda components must sum to zero");
  }
  return {(l[0] + l[1]) / 2.0, (l[0] + l[2]) / 2.0, (l[1] + l[2]) / 2.0};
}

AlphaVector SOrderRecord::apply(const AlphaVector &in) const {
  AlphaVector out;
  for (std::size_t k = 0; k < 3; ++k)
    out[k] = sign[k] * in[static_cast<std::size_t>(perm[k])];
  return out;
}

AlphaVector SOrderRecord::invert(const AlphaVector &out) const {
  AlphaVector in;
  for (std::size_t k = 0; k < 3; ++k)
    in[static_cast<std::size_t>(perm[k])] = sign[k] * out[k];
  return in;
}

SOrdered s_order(const AlphaVector &a) {
  SOrderRecord rec;
  std::stable_sort(rec.perm.begin(), rec.perm.end(), [&](int i, int j) {
    return std::abs(a[static_cast<std::size_t>(i)]) >
           std::abs(a[static_cast<std::size_t>(j)]);
  });
  const int product_sign = sign_of(a[0]) * sign_of(a[1]) * sign_of(a[2]);
  auto entry = [&](std::size_t k) {
    return a[static_cast<std::size_t>(rec.perm[k])];
  };
  rec.sign[0] = entry(0) < 0.0 ? -1 : 1;
  rec.sign[1] = entry(1) < 0.0 ? -1 : 1;
  if (entry(2) == 0.0) {
    rec.sign[2] = rec.sign[0] * rec.sign[1];
  } else {
    rec.sign[2] = product_sign * sign_of(entry(2));
  }
  return {rec.apply(a), rec};
}

bool is_s_ordered(const AlphaVector &a, double tolerance) {
  return a[0] >= a[1] - tolerance && a[1] >= std::abs(a[2]) - tolerance;
}

bool is_canonical(const AlphaVector &a, double tolerance) {
  if (!is_s_ordered(a, tolerance)) return false;
  if (a[0] > kQuarterPi + tolerance) return false;
  if (a[0] >= kQuarterPi - tolerance && a[2] < -tolerance) return false;
  return true;
}

AlphaVector canonical_reduce(const AlphaVector &a) {
  AlphaVector r{reduce_quarter(a[0]), reduce_quarter(a[1]),
                reduce_quarter(a[2])};
  AlphaVector s = s_order(r).alpha;
  if (s[0] >= kQuarterPi - kBoundaryTolerance && s[2] < 0.0) {
    // U_(a1, a2, a3) ~ U_(a1 - pi/2, a2, a3) ~ U_(pi/2 - a1, a2, -a3).
    s = s_order(AlphaVector{s[0] - kHalfPi, s[1], s[2]}).alpha;
  }
  s[0] = std::min(s[0], kQuarterPi);
  s[1] = std::min(s[1], s[0]);
  s[2] = std::clamp(s[2], -s[1], s[1]);
  return s;
}

AlphaVector interaction_content(const GateMatrix &g) {
  return analyze(g).alpha;
}

GateMatrix KakDecomposition::reassemble() const {
  return global_phase * post_local.matrix() * canonical_gate(alpha) *
         pre_local.matrix();
}

KakDecomposition kak_decompose(const GateMatrix &g) {
  const ContentAnalysis ca = analyze(g);
  const LambdaVector lambda = alpha_to_lambda(ca.alpha);

  std::array<Complex, 4> target{};
  for (std::size_t j = 0; j < 4; ++j)
    target[j] = std::polar(1.0, -2.0 * lambda[j]);

  for (const Complex omega : {Complex{1.0, 0.0}, kI}) {
    const double shift = omega == kI ? kPi : 0.0;
    std::array<int, 4> perm{0, 1, 2, 3};
    std::array<int, 4> best_perm = perm;
    double best_err = std::numeric_limits<double>::infinity();
    do {
      double err = 0.0;
      for (std::size_t j = 0; j < 4; ++j) {
        const double th =
            ca.eigen.phases[static_cast<std::size_t>(perm[j])] + shift;
        err = std::max(err, std::abs(std::polar(1.0, th) - target[j]));
      }
      if (err < best_err) {
        best_err = err;
        best_perm = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (best_err > kSpectrumMatchTolerance) continue;

    RealOrthogonal4 o;
    for (int j = 0; j < 4; ++j)
      o.row(j) = ca.eigen.o.row(best_perm[static_cast<std::size_t>(j)]);
    if (o.determinant() < 0.0) o.row(0) *= -1.0;

    Eigen::Vector4cd d_inv;
    for (int j = 0; j < 4; ++j)
      d_inv(j) = std::polar(1.0, lambda[static_cast<std::size_t>(j)]);
    const GateMatrix o_tilde_c = omega * ca.magic *
                                 o.transpose().cast<Complex>() *
                                 d_inv.asDiagonal();
    if (o_tilde_c.imag().cwiseAbs().maxCoeff() > kSpectrumMatchTolerance) {
      continue;
    }
    const RealOrthogonal4 o_tilde = orthonormalize(o_tilde_c.real());
    if (o_tilde.determinant() < 0.0) continue;

    KakDecomposition out;
    out.alpha = ca.alpha;
    out.pre_local = so4_to_local(o);
    out.post_local = so4_to_local(o_tilde);
    out.global_phase = ca.normalized.phase / omega;
    if (max_abs(GateMatrix(out.reassemble() - g)) > tol::kFactorization) {
      throw GateforgeError(ErrorCode::BranchResolutionFailed,
                           "KAK reassembly residual exceeds 1e-8");
    }
    return out;
  }
  throw GateforgeError(ErrorCode::BranchResolutionFailed,
                       "no eigenvalue branch renders the outer factor real");
}

GateMatrix canonical_gate(const AlphaVector &a) {
  GateMatrix u = GateMatrix::Identity();
  for (int k = 1; k <= 3; ++k) {
    const double ak = a[static_cast<std::size_t>(k - 1)];
    u *= std::cos(ak) * GateMatrix::Identity() -
         kI * std::sin(ak) * kron(pauli(k), pauli(k));
  }
  return u;
}

GateMatrix alpha_hamiltonian(const AlphaVector &a) {
  GateMatrix h = GateMatrix::Zero();
  for (int k = 1; k <= 3; ++k)
    h += a[static_cast<std::size_t>(k - 1)] * kron(pauli(k), pauli(k));
  return h;
}

GateMatrix coupling_hamiltonian(const CouplingMatrix &c) {
  GateMatrix h = GateMatrix::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h += c(i, j) * kron(pauli(i + 1), pauli(j + 1));
  return h;
}

Matrix2 so3_to_su2(const RealMatrix3 &r) {
  // Quaternion (w, x, y, z) of the rotation, Shepperd's branch selection.
  const double tr = r.trace();
  double w, x, y, z;
  const std::array<double, 4> diag{tr, r(0, 0), r(1, 1), r(2, 2)};
  const auto largest = static_cast<int>(
      std::max_element(diag.begin(), diag.end()) - diag.begin());
  switch (largest) {
    case 0: {
      w = 0.5 * std::sqrt(std::max(0.0, 1.0 + tr));
      x = (r(2, 1) - r(1, 2)) / (4.0 * w);
      y = (r(0, 2) - r(2, 0)) / (4.0 * w);
      z = (r(1, 0) - r(0, 1)) / (4.0 * w);
      break;
    }
    case 1: {
      x = 0.5 * std::sqrt(std::max(0.0, 1.0 + 2.0 * r(0, 0) - tr));
      w = (r(2, 1) - r(1, 2)) / (4.0 * x);
      y = (r(0, 1) + r(1, 0)) / (4.0 * x);
      z = (r(0, 2) + r(2, 0)) / (4.0 * x);
      break;
    }
    case 2: {
      y = 0.5 * std::sqrt(std::max(0.0, 1.0 + 2.0 * r(1, 1) - tr));
      w = (r(0, 2) - r(2, 0)) / (4.0 * y);
      x = (r(0, 1) + r(1, 0)) / (4.0 * y);
      z = (r(1, 2) + r(2, 1)) / (4.0 * y);
      break;
    }
    default: {
      z = 0.5 * std::sqrt(std::max(0.0, 1.0 + 2.0 * r(2, 2) - tr));
      w = (r(1, 0) - r(0, 1)) / (4.0 * z);
      x = (r(0, 2) + r(2, 0)) / (4.0 * z);
      y = (r(1, 2) + r(2, 1)) / (4.0 * z);
      break;
    }
  }
  if (w < 0.0) {
    w = -w;
    x = -x;
    y = -y;
    z = -z;
  }
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  return (w * pauli(0) - kI * (x * pauli(1) + y * pauli(2) + z * pauli(3))) /
         n;
}

HamiltonianCanonicalForm hamiltonian_canonical(const CouplingMatrix &c) {
  if (!c.allFinite()) {
    throw GateforgeError(ErrorCode::InvalidInput,
                         "coupling matrix has non-finite entries");
  }
  const Eigen::JacobiSVD<RealMatrix3> svd(c, Eigen::ComputeFullU |
                                                 Eigen::ComputeFullV);
  RealMatrix3 u = svd.matrixU();
  RealMatrix3 v = svd.matrixV();
  AlphaVector d{svd.singularValues()(0), svd.singularValues()(1),
                svd.singularValues()(2)};
  if (u.determinant() < 0.0) {
    u.col(2) *= -1.0;
    d[2] = -d[2];
  }
  if (v.determinant() < 0.0) {
    v.col(2) *= -1.0;
    d[2] = -d[2];
  }

  const SOrdered so = s_order(d);
  RealMatrix3 s1 = RealMatrix3::Zero();
  RealMatrix3 s2 = RealMatrix3::Zero();
  for (int k = 0; k < 3; ++k) {
    s1(k, so.record.perm[static_cast<std::size_t>(k)]) =
        so.record.sign[static_cast<std::size_t>(k)];
    s2(k, so.record.perm[static_cast<std::size_t>(k)]) = 1.0;
  }
  // sign product is +1, so det(s1) == det(s2) == sign of the permutation.
  if (s2.determinant() < 0.0) {
    s1 = -s1;
    s2 = -s2;
  }
  const RealMatrix3 ra = s1 * u.transpose();
  const RealMatrix3 rb = s2 * v.transpose();

  HamiltonianCanonicalForm out;
  out.alpha = so.alpha;
  out.conjugator = {so3_to_su2(ra), so3_to_su2(rb), Complex{1.0, 0.0}};
  return out;
}

}  // namespace gateforge
