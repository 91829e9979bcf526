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

#include "gateforge/canonical.hpp"
#include "gateforge/cost.hpp"
#include "gateforge/gates.hpp"
#include "gateforge/linalg.hpp"
#include "gateforge/protocol.hpp"
#include "random.hpp"

namespace gateforge {
namespace {

using testing::distance;
using testing::distance_up_to_phase;
using testing::error_code_of;
using testing::Rng;

Protocol random_protocol(Rng &rng, int max_segments) {
  Protocol p;
  p.hamiltonian_alpha = rng.s_ordered_alpha();
  p.opening = rng.local_pair();
  const int n = rng.integer(1, max_segments);
  for (int k = 0; k < n; ++k)
    p.segments.push_back({rng.local_pair(), rng.uniform(0.0, 1.0)});
  p.closing = rng.local_pair();
  return p;
}

SCENARIO("Simulating protocols") {
  GIVEN("The empty protocol") {
    const Protocol p;
    REQUIRE(distance(simulate(p), GateMatrix::Identity()) < 1e-15);
    REQUIRE(p.total_time() == 0.0);
  }
  GIVEN("One bare segment of the CNOT lambda for unit time") {
    Protocol p;
    p.hamiltonian_alpha = {kQuarterPi, 0.0, 0.0};
    p.segments.push_back({LocalUnitaryPair::identity(), 1.0});
    THEN("The result is locally equivalent to the CNOT") {
      REQUIRE(interaction_content(simulate(p))
                  .max_abs_diff({kQuarterPi, 0.0, 0.0}) < 1e-10);
    }
  }
  GIVEN("A random protocol") {
    Rng rng(61);
    const Protocol p = random_protocol(rng, 6);
    THEN("The product is unitary and matches a step-by-step evaluation") {
      const GateMatrix u = simulate(p);
      REQUIRE(is_unitary(u, 1e-9));
      GateMatrix expected = p.opening.matrix();
      for (const auto &s : p.segments)
        expected = canonical_gate(p.hamiltonian_alpha.scaled(s.duration)) *
                   s.local.matrix() * expected;
      expected = p.closing.matrix() * expected;
      REQUIRE(distance(u, expected) < 1e-12);
    }
    THEN("A negative duration is rejected") {
      Protocol bad = p;
      bad.segments[0].duration = -1.0;
      REQUIRE(error_code_of([&] { simulate(bad); }) ==
              ErrorCode::NegativeDuration);
    }
  }
}

SCENARIO("Synthesizing named gates") {
  GIVEN("The identity") {
    const Protocol p = synthesize(identity_gate(), {1.0, 0.0, 0.0});
    THEN("No drift is used") {
      REQUIRE(p.segments.empty());
      REQUIRE(p.total_time() == 0.0);
      REQUIRE(verify(p, identity_gate(), 1e-8).passed);
    }
  }
  GIVEN("The CNOT from the Ising Hamiltonian") {
    const Protocol p = synthesize(cnot_gate(), {1.0, 0.0, 0.0});
    THEN("One segment of length pi/4 reproduces it") {
      REQUIRE(p.segments.size() == 1);
      REQUIRE(std::abs(p.total_time() - kQuarterPi) < 1e-12);
      const VerificationReport r = verify(p, cnot_gate(), 1e-7);
      REQUIRE(r.passed);
      REQUIRE(r.content_error < 1e-9);
    }
    THEN("Checked against the SWAP it fails") {
      const VerificationReport r = verify(p, swap_gate(), 1e-7);
      REQUIRE_FALSE(r.passed);
      REQUIRE(std::abs(r.content_error - kQuarterPi * std::sqrt(2.0)) < 1e-8);
    }
  }
  GIVEN("The SWAP from the exchange Hamiltonian") {
    const Protocol p = synthesize(swap_gate(), {1.0, 1.0, 1.0});
    REQUIRE(p.segments.size() <= 3);
    REQUIRE(std::abs(p.total_time() - kQuarterPi) < 1e-12);
    REQUIRE(verify(p, swap_gate(), 1e-7).passed);
  }
  GIVEN("The SWAP from an antiferromagnetic exchange") {
    const Protocol p = synthesize(swap_gate(), {1.0, 1.0, -1.0});
    THEN("The shifted branch achieves pi/4") {
      REQUIRE(p.segments.size() <= 3);
      REQUIRE(std::abs(p.total_time() - kQuarterPi) < 1e-12);
      REQUIRE(verify(p, swap_gate(), 1e-7).passed);
    }
  }
  GIVEN("The DCNOT from the Ising Hamiltonian") {
    const Protocol p = synthesize(dcnot_gate(), {1.0, 0.0, 0.0});
    REQUIRE(std::abs(p.total_time() - kHalfPi) < 1e-12);
    REQUIRE(verify(p, dcnot_gate(), 1e-7).passed);
  }
  GIVEN("A vanishing Hamiltonian") {
    THEN("Entangling targets are infeasible") {
      REQUIRE(error_code_of([] {
                synthesize(cnot_gate(), {0.0, 0.0, 0.0});
              }) == ErrorCode::Infeasible);
    }
    THEN("Local targets need no drift") {
      Rng rng(62);
      const GateMatrix g = rng.local_pair().matrix();
      const Protocol p = synthesize(g, {0.0, 0.0, 0.0});
      REQUIRE(p.segments.empty());
      REQUIRE(verify(p, g, 1e-8).passed);
    }
  }
  GIVEN("A Hamiltonian vector that is not s-ordered") {
    REQUIRE(error_code_of([] { synthesize(cnot_gate(), {0.0, 1.0, 0.0}); }) ==
            ErrorCode::InvalidInput);
  }
}

SCENARIO("Synthesis round trip") {
  GIVEN("Random targets and Hamiltonians") {
    Rng rng(63);
    for (int i = 0; i < 40; ++i) {
      const GateMatrix g = rng.unitary4();
      const AlphaVector beta = interaction_content(g);
      for (int h = 0; h < 5; ++h) {
        const AlphaVector alpha = rng.s_ordered_alpha(2.0);
        const Protocol p = synthesize(g, alpha);
        REQUIRE(p.segments.size() <= 3);
        REQUIRE(std::abs(p.total_time() -
                         interaction_cost(beta, alpha).cost.value()) <= 1e-10);
        REQUIRE(verify(p, g, 1e-7).passed);
        REQUIRE(distance(simulate(p), g) <= 1e-7);
        if (h == 0) REQUIRE(trajectory_check(p));
      }
    }
  }
  GIVEN("Targets with degenerate contents") {
    Rng rng(64);
    for (const AlphaVector &b :
         {AlphaVector{kQuarterPi, kQuarterPi, kQuarterPi},
          AlphaVector{kQuarterPi, 0.2, 0.2}, AlphaVector{0.3, 0.3, -0.3},
          AlphaVector{0.5, 0.0, 0.0}, AlphaVector{0.0, 0.0, 0.0}}) {
      const GateMatrix g = rng.local_pair().matrix() * canonical_gate(b) *
                           rng.local_pair().matrix();
      for (const AlphaVector &alpha :
           {AlphaVector{1.0, 0.0, 0.0}, AlphaVector{1.0, 1.0, 1.0},
            AlphaVector{1.0, 1.0, -1.0}, AlphaVector{1.0, 0.5, 0.5}}) {
        const Protocol p = synthesize(g, alpha);
        REQUIRE(p.segments.size() <= 3);
        REQUIRE(verify(p, g, 1e-7).passed);
      }
    }
  }
}

SCENARIO("Synthesis from coupling matrices") {
  GIVEN("Random couplings") {
    Rng rng(65);
    for (int i = 0; i < 50; ++i) {
      const CouplingMatrix c = rng.coupling();
      const GateMatrix g = rng.unitary4();
      const Protocol p = synthesize_from_coupling(g, c);
      THEN("The drift is the coupling itself and the protocol is optimal") {
        REQUIRE(p.coupling.has_value());
        REQUIRE(p.segments.size() <= 3);
        const double cost =
            interaction_cost(interaction_content(g),
                             hamiltonian_canonical(c).alpha)
                .cost.value();
        REQUIRE(std::abs(p.total_time() - cost) <= 1e-10);
        REQUIRE(verify(p, g, 1e-7).passed);
      }
    }
  }
}

SCENARIO("Verification reports") {
  GIVEN("The empty protocol and the identity") {
    const VerificationReport r = verify(Protocol{}, identity_gate(), 1e-8);
    REQUIRE(r.passed);
    REQUIRE(r.total_time == 0.0);
    REQUIRE(r.max_abs_error_up_to_phase < 1e-15);
  }
  GIVEN("A protocol off by a global phase") {
    Protocol p = synthesize(cnot_gate(), {1.0, 0.0, 0.0});
    p.global_phase *= std::polar(1.0, 0.7);
    REQUIRE(verify(p, cnot_gate(), 1e-7).passed);
    REQUIRE(distance_up_to_phase(simulate(p), cnot_gate()) < 1e-7);
  }
}

SCENARIO("Trajectory check") {
  GIVEN("The empty protocol") { REQUIRE(trajectory_check(Protocol{})); }
  GIVEN("Synthesized protocols") {
    Rng rng(66);
    for (int i = 0; i < 20; ++i) {
      const Protocol p = synthesize(rng.unitary4(), rng.s_ordered_alpha());
      REQUIRE(trajectory_check(p));
    }
  }
  GIVEN("Random protocols") {
    Rng rng(67);
    for (int i = 0; i < 50; ++i) REQUIRE(trajectory_check(random_protocol(rng, 10)));
  }
  GIVEN("Random protocols driven by coupling matrices") {
    Rng rng(68);
    for (int i = 0; i < 20; ++i) {
      Protocol p = random_protocol(rng, 5);
      p.coupling = rng.coupling();
      REQUIRE(trajectory_check(p));
    }
  }
}

}  // namespace
}  // namespace gateforge
