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

#ifndef VESOPT_VES_HPP
#define VESOPT_VES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "vesopt/acquisition.hpp"
#include "vesopt/gp.hpp"
#include "vesopt/grid.hpp"
#include "vesopt/path_sampler.hpp"

namespace vesopt {

enum class VariationalFamily { exponential, gamma };
enum class InitMode { ei, random };
enum class SamplerMode { exact, coarse };

struct VesConfig {
  int max_iters = 10;
  int paths = 1024;
  double clamp_eps = kDefaultClampEps;
  // Redraw the path batch at every inner iteration instead of reusing one.
  bool resample_per_iter = false;
  VariationalFamily family = VariationalFamily::gamma;
  InitMode init = InitMode::ei;

  void validate() const;
};

inline constexpr double kMaxShape = 1e6;
inline constexpr double kShapeResidualTol = 1e-10;

struct ShapeSolution {
  double k;
  // True when the root lies beyond kMaxShape (gap distribution nearly
  // degenerate) and k was capped.
  bool capped;
};

/// Root k of log k - psi(k) = log(mean_gap) - mean_log_gap.
///
/// Throws InconsistentMomentsError when the right side is below -1e-12
/// (Jensen violated).
ShapeSolution solve_k(double mean_gap, double mean_log_gap);

/// Stationary rate k / mean_gap.
double solve_beta(double k, double mean_gap);

/// Where paths are drawn. exact samples the candidate grid itself; coarse
/// samples a separate (smaller) grid and maps every candidate to its
/// nearest path node.
class SamplerPlan {
 public:
  static SamplerPlan exact();
  static SamplerPlan coarse(const SampleGrid& candidates, SampleGrid path_grid);

  SamplerMode mode() const { return mode_; }
  const SampleGrid& path_grid() const { return path_grid_; }
  const std::vector<Index>& nearest() const { return nearest_; }

 private:
  SamplerMode mode_ = SamplerMode::exact;
  SampleGrid path_grid_;
  std::vector<Index> nearest_;
};

/// Batch over the plan's sampling nodes followed by the training inputs, so
/// every path maximum is at least the incumbent. In exact mode node g of
/// the batch is candidate g.
PathBatch draw_path_batch(const GpPosterior& gp, const SampleGrid& candidates,
                          const SamplerPlan& plan, int num_paths, std::uint64_t seed);

/// Gap moments for every candidate, backed by one shared PathBatch.
///
/// exact: field()[g] are the sample moments at candidate g.
/// coarse: mean_log_gap comes from the nearest path node; mean_gap is
/// E[y*] - incumbent - EI(g), with E[y*] from the batch and EI in closed
/// form at the candidate itself, clamped at eps. solve_moments(g) always
/// returns the self-consistent sample moments of the node used for g.
class GapModel {
 public:
  GapModel(const GpPosterior& gp, const SampleGrid& candidates, double incumbent,
           const SamplerPlan& plan, int num_paths, std::uint64_t seed,
           double eps = kDefaultClampEps);

  const PathBatch& batch() const { return batch_; }
  Index num_candidates() const { return static_cast<Index>(field_.size()); }
  Index batch_node(Index g) const;
  std::span<const GapMoments> field() const { return field_; }
  const GapMoments& solve_moments(Index g) const;
  std::vector<double> mean_gaps() const;

 private:
  SamplerMode mode_;
  std::vector<Index> nearest_;
  PathBatch batch_;
  std::vector<GapMoments> node_moments_;
  std::vector<GapMoments> field_;
};

struct VesIteration {
  Index x_index;
  double k;
  double beta;
  double eslb;
  bool ei_fallback = false;
  bool k_capped = false;
};

struct VesResult {
  Vector x_selected;
  Index x_index = -1;
  Index initial_index = -1;
  double k_final = 1.0;
  double beta_final = 1.0;
  int iterations_used = 0;
  bool converged = false;
  std::vector<VesIteration> trace;
  // Objective of the last iteration over the candidate grid.
  AcquisitionField field;
};

/// Coordinate ascent on the entropy search lower bound.
///
/// Starts from the EI maximizer (or a random admissible node), then for
/// each iteration solves the variational parameters at the current node
/// and moves to the maximizer of the bound over the grid, stopping when the
/// node repeats. A fully clamped node (every path gap at the floor) falls
/// back to the EI maximizer for that iteration.
VesResult ves_select(const GpPosterior& gp, const SampleGrid& grid, double incumbent,
                     const VesConfig& cfg, std::uint64_t seed,
                     const SamplerPlan& plan = SamplerPlan::exact(),
                     const CandidateMask& mask = {});

/// ves_select with the shifted Gamma family.
VesResult ves_gamma_select(const GpPosterior& gp, const SampleGrid& grid, double incumbent,
                           VesConfig cfg, std::uint64_t seed,
                           const SamplerPlan& plan = SamplerPlan::exact(),
                           const CandidateMask& mask = {});

/// ves_select with the exponential family; the selected node is the
/// Monte-Carlo EI maximizer of the same batch and the loop stops at the
/// second iteration.
VesResult ves_exp_select(const GpPosterior& gp, const SampleGrid& grid, double incumbent,
                         VesConfig cfg, std::uint64_t seed,
                         const SamplerPlan& plan = SamplerPlan::exact(),
                         const CandidateMask& mask = {});

}  // namespace vesopt

#endif  // VESOPT_VES_HPP
