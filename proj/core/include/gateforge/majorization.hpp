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

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gateforge/error.hpp"
#include "gateforge/types.hpp"

namespace gateforge {

/// A nonnegative duration or the explicit statement that no finite duration
/// exists.
class TimeBound {
 public:
  static TimeBound finite(double t) { return TimeBound(t); }
  static TimeBound infeasible() { return TimeBound(); }

  bool is_feasible() const { return value_.has_value(); }
  /// Throws Infeasible.
  double value() const;

  /// Infeasible bounds order after every finite one.
  friend bool operator<(const TimeBound &lhs, const TimeBound &rhs);
  friend bool operator==(const TimeBound &, const TimeBound &) = default;

 private:
  TimeBound() = default;
  explicit TimeBound(double t) : value_(t) {}
  std::optional<double> value_;
};

/// x majorizes y: sorted partial sums of x dominate those of y and the totals
/// agree.
bool majorizes(const LambdaVector &x, const LambdaVector &y,
               double tolerance = tol::kStructural);

/// a s-majorizes b: after s-ordering both, a1 >= b1, a1+a2-a3 >= b1+b2-b3 and
/// a1+a2+a3 >= b1+b2+b3.
bool s_majorizes(const AlphaVector &a, const AlphaVector &b,
                 double tolerance = tol::kStructural);

/// Smallest t >= 0 with a * t s-majorizing b. `a` must be s-ordered.
TimeBound min_time(const AlphaVector &b, const AlphaVector &a);

/// Image of v under the permutation in one-line notation: out[j] = v[perm[j]].
using Permutation = std::array<int, 4>;
LambdaVector permute(const Permutation &perm, const LambdaVector &v);

struct PermutationWeighting {
  struct Term {
    Permutation perm;
    double weight;
  };
  std::vector<Term> terms;

  /// sum_i weight_i * P_i as a doubly stochastic matrix, (P v)_j = v_perm[j].
  RealMatrix4 doubly_stochastic() const;
  /// t * sum_i weight_i * permute(perm_i, lam).
  LambdaVector apply(const LambdaVector &lam, double t) const;
};

/// Raised when no subset of at most three permutations certifies the
/// relation; carries a certificate with more terms for diagnosis.
class NoTripleFoundError : public GateforgeError {
 public:
  NoTripleFoundError(const std::string &what, PermutationWeighting fallback)
      : GateforgeError(ErrorCode::NoTripleFound, what),
        fallback_(std::move(fallback)) {}

  const PermutationWeighting &fallback() const { return fallback_; }

 private:
  PermutationWeighting fallback_;
};

/// Writes mu == t * sum_i p_i P_i lam with at most three permutations. The
/// subsets are tried in a fixed order (lexicographic permutations, then
/// lexicographic subsets of size 1, 2, 3), so the result is deterministic.
/// Throws NotMajorized, NoTripleFoundError.
PermutationWeighting birkhoff_express(const LambdaVector &mu,
                                      const LambdaVector &lam, double t);

}  // namespace gateforge
