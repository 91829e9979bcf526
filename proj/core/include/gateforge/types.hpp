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

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstddef>
#include <numbers>

namespace gateforge {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kQuarterPi = std::numbers::pi / 4.0;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;
inline constexpr Complex kI{0.0, 1.0};

/// Two tolerance tiers: structural checks on inputs, and reassembly checks
/// that absorb accumulated roundoff.
namespace tol {
inline constexpr double kStructural = 1e-10;
inline constexpr double kFactorization = 1e-8;
inline constexpr double kPhaseModulus = 1e-12;
}  // namespace tol

/// 4x4 complex operator on two qubits, computational basis ordered
/// |00>, |01>, |10>, |11> (qubit A is the most significant bit).
using GateMatrix = Eigen::Matrix4cd;
using Matrix2 = Eigen::Matrix2cd;
using RealMatrix4 = Eigen::Matrix4d;
/// Real orthogonal 4x4 matrix; local unitaries take this form in the magic
/// basis.
using RealOrthogonal4 = Eigen::Matrix4d;
using RealMatrix3 = Eigen::Matrix3d;

/// Coefficients (a1, a2, a3) of sum_k a_k sigma_k (x) sigma_k, radians.
struct AlphaVector {
  std::array<double, 3> v{0.0, 0.0, 0.0};

  constexpr AlphaVector() = default;
  constexpr AlphaVector(double a1, double a2, double a3) : v{a1, a2, a3} {}

  constexpr double operator[](std::size_t i) const { return v[i]; }
  constexpr double &operator[](std::size_t i) { return v[i]; }

  constexpr AlphaVector scaled(double t) const {
    return {v[0] * t, v[1] * t, v[2] * t};
  }
  friend constexpr AlphaVector operator+(const AlphaVector &a,
                                         const AlphaVector &b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
  }
  friend constexpr AlphaVector operator-(const AlphaVector &a,
                                         const AlphaVector &b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
  }
  friend constexpr bool operator==(const AlphaVector &,
                                   const AlphaVector &) = default;

  double max_abs_diff(const AlphaVector &o) const;
  double norm() const;
  bool is_zero(double tolerance = tol::kStructural) const;
};

/// Eigenvalues of a canonical Hamiltonian in the magic basis.
struct LambdaVector {
  std::array<double, 4> v{0.0, 0.0, 0.0, 0.0};

  constexpr LambdaVector() = default;
  constexpr LambdaVector(double l1, double l2, double l3, double l4)
      : v{l1, l2, l3, l4} {}

  constexpr double operator[](std::size_t i) const { return v[i]; }
  constexpr double &operator[](std::size_t i) { return v[i]; }

  constexpr LambdaVector scaled(double t) const {
    return {v[0] * t, v[1] * t, v[2] * t, v[3] * t};
  }
  constexpr double sum() const { return v[0] + v[1] + v[2] + v[3]; }
  friend constexpr bool operator==(const LambdaVector &,
                                   const LambdaVector &) = default;

  double max_abs_diff(const LambdaVector &o) const;
};

/// phase * (u_a (x) u_b).
struct LocalUnitaryPair {
  Matrix2 u_a = Matrix2::Identity();
  Matrix2 u_b = Matrix2::Identity();
  Complex phase{1.0, 0.0};

  static LocalUnitaryPair identity() { return {}; }

  GateMatrix matrix() const;
  LocalUnitaryPair adjoint() const;

  /// Operator product: (lhs * rhs).matrix() == lhs.matrix() * rhs.matrix().
  friend LocalUnitaryPair operator*(const LocalUnitaryPair &lhs,
                                    const LocalUnitaryPair &rhs);
};

}  // namespace gateforge
