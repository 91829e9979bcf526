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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "gateforge/gateforge.hpp"

namespace gateforge {
namespace {

// Haar-ish random unitaries via QR of a complex Gaussian matrix.
std::vector<GateMatrix> random_unitaries(int n) {
  std::mt19937_64 engine(12345);
  std::normal_distribution<double> normal;
  std::vector<GateMatrix> out;
  for (int k = 0; k < n; ++k) {
    GateMatrix g;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) g(i, j) = Complex(normal(engine), normal(engine));
    out.push_back(Eigen::HouseholderQR<GateMatrix>(g).householderQ());
  }
  return out;
}

const std::vector<GateMatrix> &targets() {
  static const std::vector<GateMatrix> t = random_unitaries(64);
  return t;
}

void BM_InteractionContent(benchmark::State &state) {
  std::size_t k = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(interaction_content(targets()[k++ % targets().size()]));
}
BENCHMARK(BM_InteractionContent);

void BM_KakDecompose(benchmark::State &state) {
  std::size_t k = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(kak_decompose(targets()[k++ % targets().size()]));
}
BENCHMARK(BM_KakDecompose);

void BM_InteractionCost(benchmark::State &state) {
  std::vector<AlphaVector> betas;
  for (const auto &g : targets()) betas.push_back(interaction_content(g));
  const AlphaVector alpha{1.0, 0.6, -0.3};
  std::size_t k = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(interaction_cost(betas[k++ % betas.size()], alpha));
}
BENCHMARK(BM_InteractionCost);

void BM_BirkhoffExpress(benchmark::State &state) {
  const AlphaVector alpha{1.0, 0.6, -0.3};
  std::vector<std::pair<LambdaVector, double>> cases;
  for (const auto &g : targets()) {
    const CostReport r = interaction_cost(interaction_content(g), alpha);
    cases.emplace_back(alpha_to_lambda(r.beta_used), r.cost.value());
  }
  const LambdaVector lam = alpha_to_lambda(alpha);
  std::size_t k = 0;
  for (auto _ : state) {
    const auto &[mu, t] = cases[k++ % cases.size()];
    benchmark::DoNotOptimize(birkhoff_express(mu, lam, t));
  }
}
BENCHMARK(BM_BirkhoffExpress);

void BM_Synthesize(benchmark::State &state) {
  const AlphaVector alpha{1.0, 0.6, -0.3};
  std::size_t k = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(synthesize(targets()[k++ % targets().size()], alpha));
}
BENCHMARK(BM_Synthesize);

void BM_SynthesizeAndVerify(benchmark::State &state) {
  const AlphaVector alpha{1.0, 0.6, -0.3};
  std::size_t k = 0;
  for (auto _ : state) {
    const GateMatrix &g = targets()[k++ % targets().size()];
    benchmark::DoNotOptimize(verify(synthesize(g, alpha), g, 1e-7));
  }
}
BENCHMARK(BM_SynthesizeAndVerify);

}  // namespace
}  // namespace gateforge

BENCHMARK_MAIN();
