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

#ifndef VESOPT_PATH_SAMPLER_HPP
#define VESOPT_PATH_SAMPLER_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "vesopt/gp.hpp"
#include "vesopt/grid.hpp"

namespace vesopt {

inline constexpr double kDefaultClampEps = 1e-12;

/// Joint posterior draws over a grid. Column p of values() is path p, so
/// values()(g, p) is path p evaluated at node g.
class PathBatch {
 public:
  /// Wraps precomputed draws (nodes x paths); path_max is recomputed.
  static PathBatch from_values(Matrix values, std::uint64_t seed = 0);

  Index num_paths() const { return values_.cols(); }
  Index num_nodes() const { return values_.rows(); }
  double value(Index p, Index g) const { return values_(g, p); }
  const Matrix& values() const { return values_; }
  /// y* sample of each path: the maximum over all sampled nodes.
  const Vector& path_max() const { return path_max_; }
  std::uint64_t seed() const { return seed_; }

 private:
  PathBatch(Matrix values, std::uint64_t seed);

  Matrix values_;
  Vector path_max_;
  std::uint64_t seed_ = 0;
};

/// Draws P paths from the joint posterior over grid.
///
/// Nodes that coincide with a training input are pinned to the observed
/// value; the remaining nodes are drawn as mean + L z with L the Cholesky
/// factor of the posterior covariance plus jitter (same ladder as the GP
/// fit). Path p uses its own RNG stream derived from (seed, p), so the
/// batch is bitwise reproducible. Throws GridDegeneracyError when the
/// covariance cannot be factored.
PathBatch sample_paths(const GpPosterior& gp, const SampleGrid& grid, int num_paths,
                       std::uint64_t seed);

/// Sample moments of gap = y* - max(y_x, incumbent), clamped below at eps.
struct GapMoments {
  double mean_gap = 0.0;
  double mean_log_gap = 0.0;
  int n_clamped = 0;
};

GapMoments gap_moments(const PathBatch& batch, Index x_index, double incumbent,
                       double eps = kDefaultClampEps);

/// gap_moments for every node of the batch in one pass. Element g is
/// bitwise equal to gap_moments(batch, g, incumbent, eps).
std::vector<GapMoments> gap_moments_all(const PathBatch& batch, double incumbent,
                                        double eps = kDefaultClampEps);

/// Writes "ystar,y_x" followed by one row per path.
void write_sample_pairs_csv(std::ostream& out, const PathBatch& batch, Index x_index);

}  // namespace vesopt

#endif  // VESOPT_PATH_SAMPLER_HPP
