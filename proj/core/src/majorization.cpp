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

#include "gateforge/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "gateforge/canonical.hpp"

namespace gateforge {

namespace {

constexpr double kWeightClamp = 1e-12;
constexpr double kCertificateResidual = 1e-9;
constexpr double kZeroDenominator = 1e-12;

std::array<double, 4> sorted_desc(const LambdaVector &x) {
  std::array<double, 4> s = x.v;
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

const std::vector<Permutation> &all_permutations() {
  static const std::vector<Permutation> perms = [] {
    std::vector<Permutation> out;
    Permutation p{0, 1, 2, 3};
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

// Tries to write mu as a convex combination of the columns t * P_i lam for the
// chosen subset. Affinely dependent subsets are skipped: a smaller subset
// already covers their hull.
std::optional<PermutationWeighting> solve_subset(
    const std::vector<int> &subset, const LambdaVector &mu,
    const LambdaVector &lam, double t) {
  const auto &perms = all_permutations();
  const auto k = static_cast<Eigen::Index>(subset.size());
  Eigen::MatrixXd a(5, k);
  Eigen::VectorXd b(5);
  for (Eigen::Index c = 0; c < k; ++c) {
    const LambdaVector col =
        permute(perms[static_cast<std::size_t>(subset[static_cast<std::size_t>(c)])], lam);
    for (Eigen::Index r = 0; r < 4; ++r)
      a(r, c) = t * col[static_cast<std::size_t>(r)];
    a(4, c) = 1.0;
  }
  for (Eigen::Index r = 0; r < 4; ++r) b(r) = mu[static_cast<std::size_t>(r)];
  b(4) = 1.0;

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  qr.setThreshold(1e-10);
  if (qr.rank() < k) return std::nullopt;
  Eigen::VectorXd p = qr.solve(b);
  for (Eigen::Index i = 0; i < k; ++i) {
    if (p(i) < -kWeightClamp) return std::nullopt;
    p(i) = std::max(p(i), 0.0);
  }
  const double total = p.sum();
  if (total <= 0.0) return std::nullopt;
  p /= total;

  PermutationWeighting w;
  for (Eigen::Index i = 0; i < k; ++i) {
    w.terms.push_back(
        {perms[static_cast<std::size_t>(subset[static_cast<std::size_t>(i)])],
         p(i)});
  }
  if (w.apply(lam, t).max_abs_diff(mu) > kCertificateResidual)
    return std::nullopt;
  return w;
}

// Lexicographic k-subsets of {0..23}.
std::optional<PermutationWeighting> search(int k, const LambdaVector &mu,
                                           const LambdaVector &lam, double t) {
  const int n = static_cast<int>(all_permutations().size());
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (auto w = solve_subset(idx, mu, lam, t)) return w;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return std::nullopt;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

double TimeBound::value() const {
  if (!value_) {
    throw GateforgeError(ErrorCode::Infeasible,
                         "no finite interaction time exists");
  }
  return *value_;
}

bool operator<(const TimeBound &lhs, const TimeBound &rhs) {
  if (!lhs.value_) return false;
  if (!rhs.value_) return true;
  return *lhs.value_ < *rhs.value_;
}

bool majorizes(const LambdaVector &x, const LambdaVector &y, double tolerance) {
  const auto xs = sorted_desc(x);
  const auto ys = sorted_desc(y);
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    sx += xs[k];
    sy += ys[k];
    if (sx < sy - tolerance) return false;
  }
  return std::abs(x.sum() - y.sum()) <= tolerance;
}

bool s_majorizes(const AlphaVector &a, const AlphaVector &b, double tolerance) {
  const AlphaVector as = s_order(a).alpha;
  const AlphaVector bs = s_order(b).alpha;
  return as[0] >= bs[0] - tolerance &&
         as[0] + as[1] - as[2] >= bs[0] + bs[1] - bs[2] - tolerance &&
         as[0] + as[1] + as[2] >= bs[0] + bs[1] + bs[2] - tolerance;
}

TimeBound min_time(const AlphaVector &b, const AlphaVector &a) {
  const AlphaVector bs = s_order(b).alpha;
  const std::array<double, 3> num{bs[0], bs[0] + bs[1] - bs[2],
                                  bs[0] + bs[1] + bs[2]};
  const std::array<double, 3> den{a[0], a[0] + a[1] - a[2],
                                  a[0] + a[1] + a[2]};
  double t = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    if (den[k] <= kZeroDenominator) {
      if (num[k] > kZeroDenominator) return TimeBound::infeasible();
      continue;
    }
    t = std::max(t, num[k] / den[k]);
  }
  return TimeBound::finite(t);
}

LambdaVector permute(const Permutation &perm, const LambdaVector &v) {
  LambdaVector out;
  for (std::size_t j = 0; j < 4; ++j)
    out[j] = v[static_cast<std::size_t>(perm[j])];
  return out;
}

RealMatrix4 PermutationWeighting::doubly_stochastic() const {
  RealMatrix4 d = RealMatrix4::Zero();
  for (const auto &term : terms)
    for (int j = 0; j < 4; ++j) d(j, term.perm[static_cast<std::size_t>(j)]) += term.weight;
  return d;
}

LambdaVector PermutationWeighting::apply(const LambdaVector &lam,
                                         double t) const {
  LambdaVector out{0.0, 0.0, 0.0, 0.0};
  for (const auto &term : terms) {
    const LambdaVector p = permute(term.perm, lam);
    for (std::size_t j = 0; j < 4; ++j) out[j] += t * term.weight * p[j];
  }
  return out;
}

PermutationWeighting birkhoff_express(const LambdaVector &mu,
                                      const LambdaVector &lam, double t) {
  if (!majorizes(lam.scaled(t), mu, kCertificateResidual)) {
    throw GateforgeError(ErrorCode::NotMajorized,
                         "t * lambda does not majorize mu");
  }
  for (int k = 1; k <= 3; ++k) {
    if (auto w = search(k, mu, lam, t)) return *w;
  }
  auto fallback = search(4, mu, lam, t);
  throw NoTripleFoundError(
      "no certificate with at most three permutations",
      fallback.value_or(PermutationWeighting{}));
}

}  // namespace gateforge
