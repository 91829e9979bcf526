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

#include "gateforge/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "gateforge/error.hpp"

namespace gateforge {

namespace {

constexpr int kMaxSweeps = 50;
constexpr double kOffDiagonalTarget = 1e-14;
// Re(m) eigenvalues closer than this are treated as one eigenspace and split
// by Im(m).
constexpr double kClusterGap = 1e-6;

double off_diagonal_norm(const Eigen::MatrixXd &a) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// Applies the plane rotation J(p, q; c, s) as a <- J^T a J for each matrix
// and accumulates v <- v J.
void rotate(Eigen::MatrixXd &a, Eigen::Index p, Eigen::Index q, double c,
            double s) {
  for (Eigen::Index k = 0; k < a.rows(); ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
}

void rotate_vectors(Eigen::MatrixXd &v, Eigen::Index p, Eigen::Index q,
                    double c, double s) {
  for (Eigen::Index k = 0; k < v.rows(); ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

// Cyclic Jacobi on a real symmetric matrix. On return a is (numerically)
// diagonal and v holds the eigenvectors as columns.
void jacobi(Eigen::MatrixXd &a, Eigen::MatrixXd &v) {
  const Eigen::Index n = a.rows();
  v = Eigen::MatrixXd::Identity(n, n);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < kOffDiagonalTarget) return;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // a <- J^T a J with J_pq = s, J_qp = -s annihilates a(p, q).
        rotate(a, p, q, c, s);
        rotate_vectors(v, p, q, c, s);
      }
    }
  }
}

double pair_off(const Eigen::MatrixXd &x, const Eigen::MatrixXd &y,
                Eigen::Index p, Eigen::Index q) {
  return x(p, q) * x(p, q) + y(p, q) * y(p, q);
}

// Joint Jacobi on two commuting symmetric matrices (Cardoso & Souloumiac
// angle). Each rotation minimizes off(x)^2 + off(y)^2 in its plane.
void joint_jacobi(Eigen::MatrixXd &x, Eigen::MatrixXd &y, Eigen::MatrixXd &v) {
  const Eigen::Index n = x.rows();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = std::hypot(off_diagonal_norm(x), off_diagonal_norm(y));
    if (off < kOffDiagonalTarget) return;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double hx0 = x(p, p) - x(q, q), hx1 = 2.0 * x(p, q);
        const double hy0 = y(p, p) - y(q, q), hy1 = 2.0 * y(p, q);
        const double g00 = hx0 * hx0 + hy0 * hy0;
        const double g01 = hx0 * hx1 + hy0 * hy1;
        const double g11 = hx1 * hx1 + hy1 * hy1;
        if (g11 < 1e-300) continue;
        // Dominant eigenvector of [[g00, g01], [g01, g11]].
        const double half_tr = 0.5 * (g00 + g11);
        const double disc = std::hypot(0.5 * (g00 - g11), g01);
        const double lmax = half_tr + disc;
        double ex = g01, ey = lmax - g00;
        if (std::hypot(ex, ey) < 1e-300) {
          ex = lmax - g11;
          ey = g01;
        }
        if (ex < 0.0) {
          ex = -ex;
          ey = -ey;
        }
        const double r = std::hypot(ex, ey);
        if (r < 1e-300) continue;
        const double c = std::sqrt((ex + r) / (2.0 * r));
        const double s = ey / std::sqrt(2.0 * r * (ex + r));
        const double before = pair_off(x, y, p, q);
        double best = before;
        double best_s = 0.0;
        for (const double cand : {s, -s}) {
          Eigen::MatrixXd tx = x, ty = y;
          rotate(tx, p, q, c, cand);
          rotate(ty, p, q, c, cand);
          const double after = pair_off(tx, ty, p, q);
          if (after < best) {
            best = after;
            best_s = cand;
          }
        }
        if (best_s == 0.0) continue;
        rotate(x, p, q, c, best_s);
        rotate(y, p, q, c, best_s);
        rotate_vectors(v, p, q, c, best_s);
      }
    }
  }
}

}  // namespace

const Matrix2 &pauli(int k) {
  static const std::array<Matrix2, 4> paulis = [] {
    std::array<Matrix2, 4> p;
    p[0] << 1, 0, 0, 1;
    p[1] << 0, 1, 1, 0;
    p[2] << 0, -kI, kI, 0;
    p[3] << 1, 0, 0, -1;
    return p;
  }();
  return paulis.at(static_cast<std::size_t>(k));
}

GateMatrix kron(const Matrix2 &a, const Matrix2 &b) {
  GateMatrix out;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 2; ++i2)
        for (int j2 = 0; j2 < 2; ++j2)
          out(2 * i1 + i2, 2 * j1 + j2) = a(i1, j1) * b(i2, j2);
  return out;
}

double max_abs(const GateMatrix &m) { return m.cwiseAbs().maxCoeff(); }
double max_abs(const RealMatrix4 &m) { return m.cwiseAbs().maxCoeff(); }

bool is_unitary(const GateMatrix &m, double tolerance) {
  return max_abs(GateMatrix(m * m.adjoint() - GateMatrix::Identity())) <=
         tolerance;
}

bool is_unitary(const Matrix2 &m, double tolerance) {
  return (m * m.adjoint() - Matrix2::Identity()).cwiseAbs().maxCoeff() <=
         tolerance;
}

const GateMatrix &magic_basis() {
  static const GateMatrix q = [] {
    const double s = 1.0 / std::sqrt(2.0);
    GateMatrix m;
    // clang-format off
    m << 0.0,     s,   -kI * s, 0.0,
         -kI * s, 0.0, 0.0,     s,
         -kI * s, 0.0, 0.0,     -s,
         0.0,     s,   kI * s,  0.0;
    // clang-format on
    return m;
  }();
  return q;
}

GateMatrix to_magic(const GateMatrix &m) {
  const GateMatrix &q = magic_basis();
  return q.adjoint() * m * q;
}

GateMatrix from_magic(const GateMatrix &m) {
  const GateMatrix &q = magic_basis();
  return q * m * q.adjoint();
}

SpecialNormalized special_normalize(const GateMatrix &m) {
  if (!is_unitary(m)) {
    throw GateforgeError(ErrorCode::NonUnitary,
                         "special_normalize requires a unitary matrix");
  }
  const Complex det = m.determinant();
  const Complex c = std::polar(1.0, std::arg(det) / 4.0);
  return {m / c, c};
}

SymmetricUnitaryEigen joint_diagonalize_symmetric_unitary(const GateMatrix &m) {
  if (max_abs(GateMatrix(m - m.transpose())) > 1e-9) {
    throw GateforgeError(ErrorCode::NotSymmetric,
                         "joint diagonalization needs m == m^T");
  }
  if (!is_unitary(m, 1e-9)) {
    throw GateforgeError(ErrorCode::NonUnitary,
                         "joint diagonalization needs a unitary matrix");
  }

  // Symmetrize exactly so the Jacobi input is symmetric to the last bit.
  const Eigen::Matrix4d re = 0.5 * (m.real() + m.real().transpose());
  const Eigen::Matrix4d im = 0.5 * (m.imag() + m.imag().transpose());

  Eigen::MatrixXd a = re;
  Eigen::MatrixXd v;
  jacobi(a, v);

  std::vector<int> order(4);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i) > a(j, j); });
  Eigen::MatrixXd sorted_v(4, 4);
  for (int k = 0; k < 4; ++k) sorted_v.col(k) = v.col(order[k]);
  v = sorted_v;

  // Split each degenerate eigenspace of Re(m) with Im(m).
  for (int start = 0; start < 4;) {
    int end = start + 1;
    while (end < 4 &&
           std::abs(a(order[end - 1], order[end - 1]) -
                    a(order[end], order[end])) < kClusterGap) {
      ++end;
    }
    if (end - start > 1) {
      const Eigen::MatrixXd block = v.middleCols(start, end - start);
      Eigen::MatrixXd restricted = block.transpose() * im * block;
      restricted = 0.5 * (restricted + restricted.transpose()).eval();
      Eigen::MatrixXd w;
      jacobi(restricted, w);
      v.middleCols(start, end - start) = block * w;
    }
    start = end;
  }

  Eigen::MatrixXd x = v.transpose() * re * v;
  Eigen::MatrixXd y = v.transpose() * im * v;
  joint_jacobi(x, y, v);

  RealOrthogonal4 o = v.transpose();
  if (o.determinant() < 0.0) o.row(0) *= -1.0;

  const GateMatrix diag = o.cast<Complex>() * m * o.transpose().cast<Complex>();
  SymmetricUnitaryEigen out{o, {}};
  Eigen::Vector4cd d;
  for (int k = 0; k < 4; ++k) {
    out.phases[static_cast<std::size_t>(k)] = std::arg(diag(k, k));
    d(k) = std::polar(1.0, out.phases[static_cast<std::size_t>(k)]);
  }
  const GateMatrix rebuilt = o.transpose().cast<Complex>() * d.asDiagonal() *
                             o.cast<Complex>();
  if (max_abs(GateMatrix(rebuilt - m)) > 1e-8) {
    throw GateforgeError(ErrorCode::DiagonalizationFailed,
                         "residual exceeds 1e-8 after joint Jacobi sweeps");
  }
  return out;
}

namespace {

void fix_sign_gauge(Matrix2 &u) {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Complex z = u(i, j);
      if (std::abs(z) <= 1e-9) continue;
      const bool negative = z.real() < -1e-14 ||
                            (std::abs(z.real()) <= 1e-14 && z.imag() < 0.0);
      if (negative) u = -u;
      return;
    }
  }
}

void normalize_special(Matrix2 &u) {
  const Complex det = u.determinant();
  u /= std::sqrt(det);
  fix_sign_gauge(u);
}

}  // namespace

LocalUnitaryPair kron_factor(const GateMatrix &m) {
  // Rearrange so that A (x) B becomes the rank-one matrix vec(A) vec(B)^T.
  Eigen::Matrix4cd r;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 2; ++i2)
        for (int j2 = 0; j2 < 2; ++j2)
          r(2 * i1 + j1, 2 * i2 + j2) = m(2 * i1 + i2, 2 * j1 + j2);

  const Eigen::JacobiSVD<Eigen::Matrix4cd> svd(
      r, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto &sv = svd.singularValues();
  if (sv(1) > tol::kFactorization) {
    throw GateforgeError(ErrorCode::NotAProduct,
                         "operator is not a tensor product (second singular "
                         "value " + std::to_string(sv(1)) + ")");
  }
  const Eigen::Vector4cd u = svd.matrixU().col(0);
  const Eigen::Vector4cd v = svd.matrixV().col(0);
  Matrix2 a, b;
  a << u(0), u(1), u(2), u(3);
  b << std::conj(v(0)), std::conj(v(1)), std::conj(v(2)), std::conj(v(3));
  if (std::abs(a.determinant()) < 1e-12 || std::abs(b.determinant()) < 1e-12) {
    throw GateforgeError(ErrorCode::NotAProduct, "singular tensor factor");
  }
  normalize_special(a);
  normalize_special(b);

  const GateMatrix ab = kron(a, b);
  const Complex overlap = (ab.adjoint() * m).trace() / 4.0;
  if (std::abs(overlap) < 1e-12) {
    throw GateforgeError(ErrorCode::NotAProduct, "vanishing overlap");
  }
  LocalUnitaryPair out{a, b, overlap / std::abs(overlap)};
  if (max_abs(GateMatrix(m - out.matrix())) > tol::kFactorization) {
    throw GateforgeError(ErrorCode::NotAProduct,
                         "reassembly residual exceeds 1e-8");
  }
  return out;
}

LocalUnitaryPair so4_to_local(const RealOrthogonal4 &o) {
  if (o.determinant() < 0.0) {
    throw GateforgeError(ErrorCode::ImproperRotation,
                         "det(o) = -1; negate a column first");
  }
  return kron_factor(from_magic(o.cast<Complex>()));
}

GateMatrix drift_exponential(const LambdaVector &lambda, double t) {
  if (t < 0.0) {
    throw GateforgeError(ErrorCode::NegativeDuration,
                         "drift duration must be nonnegative");
  }
  Eigen::Vector4cd d;
  for (int k = 0; k < 4; ++k)
    d(k) = std::polar(1.0, -lambda[static_cast<std::size_t>(k)] * t);
  const GateMatrix diag = d.asDiagonal();
  return from_magic(diag);
}

}  // namespace gateforge
