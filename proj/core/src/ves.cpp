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

#include "vesopt/ves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vesopt/error.hpp"
#include "vesopt/rng.hpp"
#include "vesopt/special_math.hpp"

namespace vesopt {

void VesConfig::validate() const {
  if (max_iters < 1) throw ConfigError("ves_max_iters", "must be at least 1");
  if (paths < 2) throw ConfigError("paths", "must be at least 2");
  if (!(clamp_eps > 0.0)) throw ConfigError("clamp_eps", "must be positive");
}

ShapeSolution solve_k(double mean_gap, double mean_log_gap) {
  if (!(mean_gap > 0.0)) throw DomainError("solve_k: mean gap must be positive");
  const double rhs = std::log(mean_gap) - mean_log_gap;
  if (!std::isfinite(rhs)) throw DomainError("solve_k: moments must be finite");
  if (rhs < -1e-12) {
    throw InconsistentMomentsError("solve_k: log E[gap] < E[log gap]; moments are inconsistent");
  }
  if (rhs < 1e-12) return {kMaxShape, true};
  const auto f = [rhs](double k) { return log_minus_digamma(k) - rhs; };
  if (f(kMaxShape) >= 0.0) return {kMaxShape, true};
  const double tol = std::min(kShapeResidualTol, 1e-6 * rhs);
  return {solve_monotone_root(f, RootBracket{1e-3, 1e3, tol}), false};
}

double solve_beta(double k, double mean_gap) {
  if (!(k > 0.0)) throw DomainError("solve_beta: k must be positive");
  if (!(mean_gap > 0.0)) throw DomainError("solve_beta: mean gap must be positive");
  return k / mean_gap;
}

SamplerPlan SamplerPlan::exact() { return SamplerPlan(); }

SamplerPlan SamplerPlan::coarse(const SampleGrid& candidates, SampleGrid path_grid) {
  if (path_grid.empty()) throw ConfigError("path_grid", "coarse sampler needs a nonempty path grid");
  if (path_grid.dimension() != candidates.dimension()) {
    throw ConfigError("path_grid", "dimension differs from the candidate grid");
  }
  SamplerPlan plan;
  plan.mode_ = SamplerMode::coarse;
  plan.nearest_.resize(static_cast<std::size_t>(candidates.size()));
  for (Index g = 0; g < candidates.size(); ++g) {
    plan.nearest_[static_cast<std::size_t>(g)] = path_grid.nearest(candidates.point(g));
  }
  plan.path_grid_ = std::move(path_grid);
  return plan;
}

PathBatch draw_path_batch(const GpPosterior& gp, const SampleGrid& candidates,
                          const SamplerPlan& plan, int num_paths, std::uint64_t seed) {
  const SampleGrid& base = plan.mode() == SamplerMode::exact ? candidates : plan.path_grid();
  return sample_paths(gp, base.with_appended(gp.data().points), num_paths, seed);
}

GapModel::GapModel(const GpPosterior& gp, const SampleGrid& candidates, double incumbent,
                   const SamplerPlan& plan, int num_paths, std::uint64_t seed, double eps)
    : mode_(plan.mode()),
      nearest_(plan.nearest()),
      batch_(draw_path_batch(gp, candidates, plan, num_paths, seed)),
      node_moments_(gap_moments_all(batch_, incumbent, eps)) {
  const auto n = static_cast<std::size_t>(candidates.size());
  if (mode_ == SamplerMode::exact) {
    field_.assign(node_moments_.begin(), node_moments_.begin() + static_cast<std::ptrdiff_t>(n));
    return;
  }
  if (nearest_.size() != n) throw Error("GapModel: sampler plan built for a different grid");
  const double mean_ystar = batch_.path_max().mean();
  const AcquisitionField ei = ei_field(gp, candidates, incumbent);
  field_.resize(n);
  for (std::size_t g = 0; g < n; ++g) {
    const GapMoments& near = node_moments_[static_cast<std::size_t>(nearest_[g])];
    field_[g].mean_gap = std::max(mean_ystar - incumbent - ei.values[g], eps);
    field_[g].mean_log_gap = near.mean_log_gap;
    field_[g].n_clamped = near.n_clamped;
  }
}

Index GapModel::batch_node(Index g) const {
  if (g < 0 || g >= num_candidates()) throw Error("GapModel: candidate index out of range");
  return mode_ == SamplerMode::exact ? g : nearest_[static_cast<std::size_t>(g)];
}

const GapMoments& GapModel::solve_moments(Index g) const {
  return node_moments_[static_cast<std::size_t>(batch_node(g))];
}

std::vector<double> GapModel::mean_gaps() const {
  std::vector<double> out(field_.size());
  std::transform(field_.begin(), field_.end(), out.begin(),
                 [](const GapMoments& m) { return m.mean_gap; });
  return out;
}

namespace {

Index initial_node(const GpPosterior& gp, const SampleGrid& grid, double incumbent,
                   const VesConfig& cfg, std::uint64_t seed, const CandidateMask& mask) {
  if (cfg.init == InitMode::ei) return ei_field(gp, grid, incumbent, mask).argmax_index;
  std::vector<Index> admissible;
  for (Index g = 0; g < grid.size(); ++g) {
    if (mask.empty() || mask[static_cast<std::size_t>(g)]) admissible.push_back(g);
  }
  if (admissible.empty()) return -1;
  Rng rng = make_rng(seed, kVesInitStream);
  std::uniform_int_distribution<std::size_t> pick(0, admissible.size() - 1);
  return admissible[pick(rng)];
}

}  // namespace

VesResult ves_select(const GpPosterior& gp, const SampleGrid& grid, double incumbent,
                     const VesConfig& cfg, std::uint64_t seed, const SamplerPlan& plan,
                     const CandidateMask& mask) {
  cfg.validate();
  if (grid.empty()) throw Error("ves_select: empty grid");
  if (!mask.empty() && mask.size() != static_cast<std::size_t>(grid.size())) {
    throw Error("ves_select: mask length differs from the grid");
  }

  VesResult result;
  Index x = initial_node(gp, grid, incumbent, cfg, seed, mask);
  if (x < 0) throw Error("ves_select: no admissible candidate");
  result.initial_index = x;

  GapModel model(gp, grid, incumbent, plan, cfg.paths, seed, cfg.clamp_eps);
  const int paths = cfg.paths;
  for (int n = 1; n <= cfg.max_iters; ++n) {
    if (cfg.resample_per_iter && n > 1) {
      model = GapModel(gp, grid, incumbent, plan, paths,
                       derive_seed(seed, static_cast<std::uint64_t>(n)), cfg.clamp_eps);
    }
    const GapMoments& m = model.solve_moments(x);
    VesIteration it{};
    if (cfg.family == VariationalFamily::exponential) {
      it.k = 1.0;
      it.beta = lambda_star(m.mean_gap);
      result.field = eslb_exp(it.beta, model.mean_gaps(), mask);
    } else if (m.n_clamped == paths) {
      it.ei_fallback = true;
      it.k = 1.0;
      it.beta = lambda_star(m.mean_gap);
      result.field = ei_field(gp, grid, incumbent, mask);
    } else {
      const ShapeSolution shape = solve_k(m.mean_gap, m.mean_log_gap);
      it.k = shape.k;
      it.k_capped = shape.capped;
      it.beta = solve_beta(shape.k, m.mean_gap);
      result.field = eslb_gamma(GammaVariational{it.k, it.beta, 0.0}, model.field(), mask);
    }
    it.x_index = result.field.argmax_index;
    it.eslb = result.field.max_value();
    result.trace.push_back(it);
    const bool repeated = it.x_index == x;
    x = it.x_index;
    if (repeated) {
      result.converged = true;
      break;
    }
  }

  const VesIteration& last = result.trace.back();
  result.x_index = last.x_index;
  result.x_selected = grid.point(last.x_index);
  result.k_final = last.k;
  result.beta_final = last.beta;
  result.iterations_used = static_cast<int>(result.trace.size());
  return result;
}

VesResult ves_gamma_select(const GpPosterior& gp, const SampleGrid& grid, double incumbent,
                           VesConfig cfg, std::uint64_t seed, const SamplerPlan& plan,
                           const CandidateMask& mask) {
  cfg.family = VariationalFamily::gamma;
  return ves_select(gp, grid, incumbent, cfg, seed, plan, mask);
}

VesResult ves_exp_select(const GpPosterior& gp, const SampleGrid& grid, double incumbent,
                         VesConfig cfg, std::uint64_t seed, const SamplerPlan& plan,
                         const CandidateMask& mask) {
  cfg.family = VariationalFamily::exponential;
  return ves_select(gp, grid, incumbent, cfg, seed, plan, mask);
}

}  // namespace vesopt
