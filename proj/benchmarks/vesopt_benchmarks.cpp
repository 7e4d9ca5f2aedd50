// Copyright 2026 The vesopt Authors. All Rights Reserved.
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
// =============================================================================

#include <random>

#include <benchmark/benchmark.h>

#include "vesopt/acquisition.hpp"
#include "vesopt/gp.hpp"
#include "vesopt/grid.hpp"
#include "vesopt/objectives.hpp"
#include "vesopt/path_sampler.hpp"
#include "vesopt/special_math.hpp"
#include "vesopt/ves.hpp"

namespace {

using namespace vesopt;

Dataset himmelblau_data(int n) {
  const Objective f = *find_objective("himmelblau");
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  Dataset d(2);
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector2d x(u(rng), u(rng));
    d.add(x, f(x));
  }
  return d;
}

GpPosterior fitted(int n) {
  const Dataset raw = himmelblau_data(n);
  const Dataset z = Standardizer::fit(raw.values).apply(raw);
  return GpPosterior(z, fit_hyperparameters(z));
}

void BM_Digamma(benchmark::State& state) {
  double x = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(digamma(x));
    x = x < 1e3 ? x * 1.01 : 0.01;
  }
}
BENCHMARK(BM_Digamma);

void BM_SolveK(benchmark::State& state) {
  double rhs = 1e-3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_k(1.0, -rhs));
    rhs = rhs < 5.0 ? rhs * 1.1 : 1e-3;
  }
}
BENCHMARK(BM_SolveK);

void BM_FitHyperparameters(benchmark::State& state) {
  const Dataset raw = himmelblau_data(static_cast<int>(state.range(0)));
  const Dataset z = Standardizer::fit(raw.values).apply(raw);
  for (auto _ : state) benchmark::DoNotOptimize(fit_hyperparameters(z));
}
BENCHMARK(BM_FitHyperparameters)->Arg(2)->Arg(20)->Arg(52)->Unit(benchmark::kMillisecond);

void BM_SamplePaths(benchmark::State& state) {
  const GpPosterior gp = fitted(20);
  const int res = static_cast<int>(state.range(0));
  const SampleGrid grid = SampleGrid::regular(Box{{-5.0, -5.0}, {5.0, 5.0}}, std::vector<int>{res, res});
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_paths(gp, grid, 1024, seed++));
}
BENCHMARK(BM_SamplePaths)->Arg(21)->Arg(41)->Unit(benchmark::kMillisecond);

void BM_GapMomentsAll(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n01;
  Matrix v(10201, 1024);
  for (Index i = 0; i < v.size(); ++i) v.data()[i] = n01(rng);
  const PathBatch batch = PathBatch::from_values(std::move(v));
  for (auto _ : state) benchmark::DoNotOptimize(gap_moments_all(batch, 0.5));
}
BENCHMARK(BM_GapMomentsAll)->Unit(benchmark::kMillisecond);

void BM_MesField(benchmark::State& state) {
  const GpPosterior gp = fitted(20);
  const SampleGrid grid = SampleGrid::regular(Box{{-5.0, -5.0}, {5.0, 5.0}}, std::vector<int>{101, 101});
  const SamplerPlan plan = SamplerPlan::coarse(grid, SampleGrid::regular(Box{{-5.0, -5.0}, {5.0, 5.0}}, std::vector<int>{41, 41}));
  const PathBatch batch = draw_path_batch(gp, grid, plan, 1024, 5);
  const Vector& ystar = batch.path_max();
  const std::span<const double> s(ystar.data(), static_cast<std::size_t>(ystar.size()));
  for (auto _ : state) benchmark::DoNotOptimize(mes_field(gp, grid, s));
}
BENCHMARK(BM_MesField)->Unit(benchmark::kMillisecond);

void BM_VesGammaSelect(benchmark::State& state) {
  const GpPosterior gp = fitted(20);
  const Box box{{-5.0, -5.0}, {5.0, 5.0}};
  const SampleGrid grid = SampleGrid::regular(box, std::vector<int>{101, 101});
  const SamplerPlan plan = SamplerPlan::coarse(grid, SampleGrid::regular(box, std::vector<int>{41, 41}));
  VesConfig cfg;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ves_gamma_select(gp, grid, gp.data().incumbent(), cfg, seed++, plan));
  }
}
BENCHMARK(BM_VesGammaSelect)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
