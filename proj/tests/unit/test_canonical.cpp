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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <vector>

#include "gateforge/canonical.hpp"
#include "gateforge/gates.hpp"
#include "gateforge/linalg.hpp"
#include "random.hpp"

namespace gateforge {
namespace {

using testing::distance;
using testing::error_code_of;
using testing::Rng;

// Local invariants (G1, G2) of a two-qubit gate; equal for locally equivalent
// gates, computed without any branch choices.
std::pair<Complex, double> makhlin_invariants(const GateMatrix &g) {
  const GateMatrix m_b = to_magic(g);
  const GateMatrix m = m_b.transpose() * m_b;
  const Complex det = g.determinant();
  const Complex tr = m.trace();
  const Complex g1 = tr * tr / (16.0 * det);
  const Complex g2 = (tr * tr - (m * m).trace()) / (4.0 * det);
  return {g1, g2.real()};
}

// exp(-i H_a) by Hermitian eigendecomposition.
GateMatrix exp_minus_i(const GateMatrix &h) {
  const Eigen::SelfAdjointEigenSolver<GateMatrix> es(h);
  Eigen::Vector4cd d;
  for (int k = 0; k < 4; ++k) d(k) = std::polar(1.0, -es.eigenvalues()(k));
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

void require_alpha(const AlphaVector &got, const AlphaVector &want,
                   double tolerance) {
  INFO("got (" << got[0] << ", " << got[1] << ", " << got[2] << ") want ("
               << want[0] << ", " << want[1] << ", " << want[2] << ")");
  REQUIRE(got.max_abs_diff(want) <= tolerance);
}

SCENARIO("Alpha and lambda vectors") {
  GIVEN("The CNOT alpha") {
    const LambdaVector l = alpha_to_lambda({kQuarterPi, 0.0, 0.0});
    THEN("lambda is pi/4 (1, 1, -1, -1)") {
      REQUIRE(l.max_abs_diff(LambdaVector{kQuarterPi, kQuarterPi, -kQuarterPi,
                                          -kQuarterPi}) < 1e-15);
      require_alpha(lambda_to_alpha(l), {kQuarterPi, 0.0, 0.0}, 1e-15);
    }
  }
  GIVEN("The SWAP alpha") {
    const LambdaVector l = alpha_to_lambda({kQuarterPi, kQuarterPi, kQuarterPi});
    THEN("lambda is pi/4 (1, 1, 1, -3)") {
      REQUIRE(l.max_abs_diff(LambdaVector{kQuarterPi, kQuarterPi, kQuarterPi,
                                          -3.0 * kQuarterPi}) < 1e-15);
    }
  }
  GIVEN("Random vectors") {
    Rng rng(21);
    for (int i = 0; i < 1000; ++i) {
      const AlphaVector a{rng.uniform(-3, 3), rng.uniform(-3, 3),
                          rng.uniform(-3, 3)};
      const LambdaVector l = alpha_to_lambda(a);
      REQUIRE(std::abs(l.sum()) <= 1e-10);
      require_alpha(lambda_to_alpha(l), a, 1e-12);
    }
  }
  GIVEN("A vector that is not traceless") {
    THEN("NotTraceless is raised") {
      REQUIRE(error_code_of([] { lambda_to_alpha({1.0, 0.0, 0.0, 0.0}); }) ==
              ErrorCode::NotTraceless);
    }
  }
}

SCENARIO("s-ordering") {
  GIVEN("Examples") {
    require_alpha(s_order({1.0, 2.0, 3.0}).alpha, {3.0, 2.0, 1.0}, 0.0);
    require_alpha(s_order({-kQuarterPi, kQuarterPi, 0.0}).alpha,
                  {kQuarterPi, kQuarterPi, 0.0}, 0.0);
    require_alpha(s_order({0.1, -0.5, 0.2}).alpha, {0.5, 0.2, -0.1}, 0.0);
  }
  GIVEN("Random vectors") {
    Rng rng(22);
    for (int i = 0; i < 1000; ++i) {
      AlphaVector a{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
      if (i % 10 == 0) a[static_cast<std::size_t>(i % 3)] = 0.0;
      const SOrdered s = s_order(a);
      {  // The result is s-ordered with the product sign on a3
        REQUIRE(is_s_ordered(s.alpha, 0.0));
        const double prod = a[0] * a[1] * a[2];
        if (prod > 0) REQUIRE(s.alpha[2] > 0);
        if (prod < 0) REQUIRE(s.alpha[2] < 0);
        if (prod == 0) REQUIRE(s.alpha[2] == 0);
      }
      {  // The record reproduces and inverts the map
        require_alpha(s.record.apply(a), s.alpha, 0.0);
        require_alpha(s.record.invert(s.alpha), a, 0.0);
        REQUIRE(s.record.sign[0] * s.record.sign[1] * s.record.sign[2] == 1);
      }
    }
  }
}

SCENARIO("Canonical reduction") {
  GIVEN("Vectors that are already canonical") {
    require_alpha(canonical_reduce({kQuarterPi, kQuarterPi, kQuarterPi}),
                  {kQuarterPi, kQuarterPi, kQuarterPi}, 1e-15);
  }
  GIVEN("Shifted vectors") {
    require_alpha(canonical_reduce({3 * kQuarterPi, 0.0, 0.0}),
                  {kQuarterPi, 0.0, 0.0}, 1e-15);
    require_alpha(canonical_reduce({kHalfPi + 0.1, 0.0, 0.0}), {0.1, 0.0, 0.0},
                  1e-15);
    THEN("The assembled gates stay locally equivalent") {
      for (const AlphaVector &a : {AlphaVector{3 * kQuarterPi, 0.0, 0.0},
                                   AlphaVector{kHalfPi + 0.1, 0.0, 0.0}}) {
        require_alpha(interaction_content(canonical_gate(a)),
                      interaction_content(canonical_gate(canonical_reduce(a))),
                      1e-9);
      }
    }
  }
  GIVEN("The Weyl boundary a1 = pi/4") {
    THEN("a3 is made nonnegative") {
      require_alpha(canonical_reduce({kQuarterPi, 0.3, -0.2}),
                    {kQuarterPi, 0.3, 0.2}, 1e-12);
    }
  }
  GIVEN("Random vectors") {
    Rng rng(23);
    for (int i = 0; i < 500; ++i) {
      const AlphaVector a{rng.uniform(-4, 4), rng.uniform(-4, 4),
                          rng.uniform(-4, 4)};
      const AlphaVector c = canonical_reduce(a);
      REQUIRE(is_canonical(c));
      require_alpha(canonical_reduce(c), c, 1e-12);
      const auto [g1a, g2a] = makhlin_invariants(canonical_gate(a));
      const auto [g1c, g2c] = makhlin_invariants(canonical_gate(c));
      REQUIRE(std::abs(g1a - g1c) < 1e-9);
      REQUIRE(std::abs(g2a - g2c) < 1e-9);
    }
  }
}

SCENARIO("Interaction content of named gates") {
  GIVEN("The CNOT") {
    require_alpha(interaction_content(cnot_gate()), {kQuarterPi, 0.0, 0.0},
                  1e-10);
  }
  GIVEN("The DCNOT") {
    require_alpha(interaction_content(dcnot_gate()),
                  {kQuarterPi, kQuarterPi, 0.0}, 1e-9);
  }
  GIVEN("The SWAP") {
    require_alpha(interaction_content(swap_gate()),
                  {kQuarterPi, kQuarterPi, kQuarterPi}, 1e-9);
  }
  GIVEN("The identity") {
    require_alpha(interaction_content(identity_gate()), {0.0, 0.0, 0.0}, 1e-10);
  }
  GIVEN("Controlled-U gates") {
    for (double beta : {0.0, 0.1, kPi / 8, 0.5, kQuarterPi}) {
      require_alpha(interaction_content(controlled_u_gate(beta)),
                    {beta, 0.0, 0.0}, 1e-9);
    }
  }
  GIVEN("Controlled-phase gates") {
    for (double phi : {0.2, kPi / 5, 2.0, kPi}) {
      require_alpha(interaction_content(controlled_phase_gate(phi)),
                    {phi / 4, 0.0, 0.0}, 1e-9);
    }
  }
  GIVEN("A random product gate") {
    Rng rng(24);
    require_alpha(interaction_content(rng.local_pair().matrix()),
                  {0.0, 0.0, 0.0}, 1e-9);
  }
  GIVEN("The drift of the CNOT lambda for unit time") {
    const LambdaVector l{kQuarterPi, kQuarterPi, -kQuarterPi, -kQuarterPi};
    require_alpha(interaction_content(drift_exponential(l, 1.0)),
                  {kQuarterPi, 0.0, 0.0}, 1e-10);
  }
  GIVEN("The drift of the SWAP lambda for unit time") {
    const LambdaVector l =
        alpha_to_lambda({kQuarterPi, kQuarterPi, kQuarterPi});
    require_alpha(interaction_content(drift_exponential(l, 1.0)),
                  {kQuarterPi, kQuarterPi, kQuarterPi}, 1e-9);
  }
  GIVEN("A non-unitary matrix") {
    THEN("NonUnitary is raised") {
      REQUIRE(error_code_of([] {
                interaction_content(GateMatrix(2.0 * GateMatrix::Identity()));
              }) == ErrorCode::NonUnitary);
    }
  }
}

SCENARIO("Interaction content recovers constructed gates") {
  GIVEN("Gates L1 exp(-i H_beta) L2 with known canonical beta") {
    Rng rng(25);
    std::vector<AlphaVector> betas;
    for (int i = 0; i < 400; ++i) betas.push_back(rng.canonical_beta());
    // Faces, edges and corners of the region.
    for (double x : {0.0, 0.2, 0.5, kQuarterPi}) {
      betas.push_back({x, x, x});
      betas.push_back({x, x, -x});
      betas.push_back({x, x, 0.0});
      betas.push_back({x, 0.0, 0.0});
      betas.push_back({kQuarterPi, x, x});
      betas.push_back({kQuarterPi, x, 0.0});
      betas.push_back({kQuarterPi, kQuarterPi, x});
    }
    for (const AlphaVector &b : betas) {
      const AlphaVector want = canonical_reduce(b);
      const GateMatrix g = rng.local_pair().matrix() * exp_minus_i(alpha_hamiltonian(b)) *
                           rng.local_pair().matrix();
      require_alpha(interaction_content(g), want, 1e-8);
    }
  }
  GIVEN("Random unitaries under random local dressing") {
    Rng rng(26);
    for (int i = 0; i < 300; ++i) {
      const GateMatrix g = rng.unitary4();
      const AlphaVector a = interaction_content(g);
      REQUIRE(is_canonical(a));
      const GateMatrix dressed =
          rng.local_pair().matrix() * g * rng.local_pair().matrix();
      require_alpha(interaction_content(dressed), a, 1e-8);
      const auto [g1, g2] = makhlin_invariants(g);
      const auto [h1, h2] = makhlin_invariants(canonical_gate(a));
      REQUIRE(std::abs(g1 - h1) < 1e-8);
      REQUIRE(std::abs(g2 - h2) < 1e-8);
    }
  }
}

SCENARIO("Canonical gates") {
  GIVEN("Random alpha vectors") {
    Rng rng(27);
    for (int i = 0; i < 100; ++i) {
      const AlphaVector a{rng.uniform(-2, 2), rng.uniform(-2, 2),
                          rng.uniform(-2, 2)};
      {  // The Pauli-product form equals the matrix exponential
        REQUIRE(distance(canonical_gate(a), exp_minus_i(alpha_hamiltonian(a))) <
                1e-12);
      }
    }
  }
}

SCENARIO("KAK decomposition") {
  GIVEN("The identity") {
    const KakDecomposition k = kak_decompose(identity_gate());
    THEN("The content vanishes and the gate reassembles") {
      require_alpha(k.alpha, {0.0, 0.0, 0.0}, 1e-10);
      REQUIRE(distance(k.reassemble(), identity_gate()) < 1e-10);
    }
  }
  GIVEN("Named and degenerate gates") {
    Rng rng(28);
    std::vector<GateMatrix> gates{cnot_gate(), dcnot_gate(), swap_gate(),
                                  controlled_u_gate(0.3),
                                  controlled_phase_gate(kPi / 5)};
    for (const AlphaVector &b :
         {AlphaVector{kQuarterPi, kQuarterPi, 0.2},
          AlphaVector{0.4, 0.4, 0.4}, AlphaVector{0.4, 0.4, -0.4},
          AlphaVector{0.5, 0.1, 0.1}, AlphaVector{kQuarterPi, 0.3, 0.3}}) {
      gates.push_back(rng.local_pair().matrix() * canonical_gate(b) *
                      rng.local_pair().matrix());
    }
    for (const GateMatrix &g : gates) {
      const KakDecomposition k = kak_decompose(g);
      REQUIRE(distance(k.reassemble(), g) <= 1e-8);
      require_alpha(k.alpha, interaction_content(g), 0.0);
    }
  }
  GIVEN("Random unitaries") {
    Rng rng(29);
    for (int i = 0; i < 1000; ++i) {
      const GateMatrix g = rng.unitary4();
      const KakDecomposition k = kak_decompose(g);
      REQUIRE(distance(k.reassemble(), g) <= 1e-8);
      REQUIRE(is_canonical(k.alpha));
    }
  }
}

SCENARIO("Spin-1/2 lift of rotations") {
  GIVEN("Random rotations") {
    Rng rng(30);
    for (int i = 0; i < 200; ++i) {
      const Matrix2 u0 = rng.su2();
      // Rotation implemented by u0 on Bloch vectors.
      RealMatrix3 r;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          r(b, a) = 0.5 * (pauli(b + 1) * u0 * pauli(a + 1) * u0.adjoint())
                              .trace()
                              .real();
      const Matrix2 u = so3_to_su2(r);
      {  // Conjugation reproduces the rotation on the positive trace branch
        REQUIRE(u.trace().real() >= -1e-12);
        REQUIRE(std::abs(u.determinant() - 1.0) < 1e-12);
        for (int a = 0; a < 3; ++a) {
          Matrix2 expected = Matrix2::Zero();
          for (int k = 0; k < 3; ++k) expected += r(k, a) * pauli(k + 1);
          REQUIRE((u * pauli(a + 1) * u.adjoint() - expected)
                      .cwiseAbs()
                      .maxCoeff() < 1e-12);
        }
      }
    }
  }
}

SCENARIO("Canonical form of coupling Hamiltonians") {
  GIVEN("The Ising coupling") {
    CouplingMatrix c = CouplingMatrix::Zero();
    c(0, 0) = 1.0;
    const HamiltonianCanonicalForm f = hamiltonian_canonical(c);
    require_alpha(f.alpha, {1.0, 0.0, 0.0}, 1e-12);
    const GateMatrix w = f.conjugator.matrix();
    REQUIRE(distance(w * coupling_hamiltonian(c) * w.adjoint(),
                     alpha_hamiltonian(f.alpha)) < 1e-10);
  }
  GIVEN("The exchange coupling") {
    const HamiltonianCanonicalForm f =
        hamiltonian_canonical(CouplingMatrix::Identity());
    require_alpha(f.alpha, {1.0, 1.0, 1.0}, 1e-12);
  }
  GIVEN("A coupling with negative determinant") {
    const HamiltonianCanonicalForm f =
        hamiltonian_canonical(CouplingMatrix(-CouplingMatrix::Identity()));
    require_alpha(f.alpha, {1.0, 1.0, -1.0}, 1e-12);
  }
  GIVEN("Random couplings") {
    Rng rng(31);
    for (int i = 0; i < 500; ++i) {
      CouplingMatrix c = rng.coupling();
      if (i % 10 == 0) c.col(2).setZero();
      const HamiltonianCanonicalForm f = hamiltonian_canonical(c);
      REQUIRE(is_s_ordered(f.alpha, 0.0));
      const GateMatrix w = f.conjugator.matrix();
      REQUIRE(distance(w * coupling_hamiltonian(c) * w.adjoint(),
                       alpha_hamiltonian(f.alpha)) < 1e-8);
      const Eigen::Vector3d sv =
          Eigen::JacobiSVD<RealMatrix3>(c).singularValues();
      for (int k = 0; k < 3; ++k)
        REQUIRE(std::abs(std::abs(f.alpha[static_cast<std::size_t>(k)]) -
                         sv(k)) < 1e-10);
    }
  }
}

}  // namespace
}  // namespace gateforge
