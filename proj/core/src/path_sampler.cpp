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

#include "vesopt/path_sampler.hpp"

#include <cmath>
#include <ostream>
#include <random>

#include "vesopt/csv.hpp"
#include "vesopt/error.hpp"
#include "vesopt/rng.hpp"

namespace vesopt {

PathBatch::PathBatch(Matrix values, std::uint64_t seed)
    : values_(std::move(values)), seed_(seed) {
  if (values_.cols() < 2) throw Error("PathBatch: need at least two paths");
  if (values_.rows() < 1) throw Error("PathBatch: need at least one node");
  path_max_ = values_.colwise().maxCoeff().transpose();
}

PathBatch PathBatch::from_values(Matrix values, std::uint64_t seed) {
  return PathBatch(std::move(values), seed);
}

PathBatch sample_paths(const GpPosterior& gp, const SampleGrid& grid, int num_paths,
                       std::uint64_t seed) {
  if (num_paths < 2) throw ConfigError("paths", "at least two paths are required");
  if (grid.empty()) throw Error("sample_paths: empty grid");
  if (grid.dimension() != gp.dimension() && !gp.data().empty()) {
    throw Error("sample_paths: grid dimension differs from the data");
  }
  const Dataset& data = gp.data();
  const Index num_nodes = grid.size();

  // Pin nodes sitting on training inputs; they have no posterior spread.
  std::vector<Index> pinned_to(static_cast<std::size_t>(num_nodes), -1);
  std::vector<Index> free_nodes;
  free_nodes.reserve(static_cast<std::size_t>(num_nodes));
  for (Index g = 0; g < num_nodes; ++g) {
    for (Index i = 0; i < data.size(); ++i) {
      const double scale = 1.0 + data.points.row(i).squaredNorm();
      if ((grid.points().row(g) - data.points.row(i)).squaredNorm() <= 1e-24 * scale) {
        pinned_to[static_cast<std::size_t>(g)] = i;
        break;
      }
    }
    if (pinned_to[static_cast<std::size_t>(g)] < 0) free_nodes.push_back(g);
  }

  Matrix values(num_nodes, num_paths);
  for (Index g = 0; g < num_nodes; ++g) {
    const Index i = pinned_to[static_cast<std::size_t>(g)];
    if (i >= 0) values.row(g).setConstant(data.values(i));
  }

  const Index nf = static_cast<Index>(free_nodes.size());
  if (nf > 0) {
    Matrix free_pts(nf, grid.dimension());
    for (Index j = 0; j < nf; ++j) free_pts.row(j) = grid.points().row(free_nodes[static_cast<std::size_t>(j)]);
    const Vector mean = gp.means(free_pts);
    const Matrix cov = gp.covariance(free_pts);

    const double sf2 = gp.params().sigma_f * gp.params().sigma_f;
    Eigen::LLT<Matrix> llt;
    bool ok = false;
    for (double rel = kJitterStart; rel <= kJitterMax * (1.0 + 1e-9) && !ok; rel *= 10.0) {
      Matrix a = cov;
      a.diagonal().array() += rel * sf2;
      llt.compute(a);
      ok = llt.info() == Eigen::Success && llt.matrixLLT().diagonal().minCoeff() > 0.0;
    }
    if (!ok) {
      throw GridDegeneracyError("sample_paths: posterior covariance not factorable at maximum jitter");
    }

    Matrix z(nf, num_paths);
    for (Index p = 0; p < num_paths; ++p) {
      Rng rng = make_rng(seed, static_cast<std::uint64_t>(p));
      std::normal_distribution<double> normal;
      for (Index j = 0; j < nf; ++j) z(j, p) = normal(rng);
    }
    const Matrix draws = llt.matrixL() * z;
    for (Index j = 0; j < nf; ++j) {
      values.row(free_nodes[static_cast<std::size_t>(j)]) = draws.row(j).array() + mean(j);
    }
  }
  return PathBatch::from_values(std::move(values), seed);
}

namespace {

// Rounding can push the log moment a few ulps past log E[gap]; project it back.
GapMoments finish_moments(double sum, double sum_log, int clamped, double n) {
  const double mean_gap = sum / n;
  return {mean_gap, std::min(sum_log / n, std::log(mean_gap)), clamped};
}

}  // namespace

GapMoments gap_moments(const PathBatch& batch, Index x_index, double incumbent, double eps) {
  if (x_index < 0 || x_index >= batch.num_nodes()) throw Error("gap_moments: node index out of range");
  if (!(eps > 0.0)) throw DomainError("gap_moments: clamp floor must be positive");
  double sum = 0.0, sum_log = 0.0;
  int clamped = 0;
  for (Index p = 0; p < batch.num_paths(); ++p) {
    double gap = batch.path_max()(p) - std::max(batch.value(p, x_index), incumbent);
    if (gap <= eps) {
      gap = eps;
      ++clamped;
    }
    sum += gap;
    sum_log += std::log(gap);
  }
  return finish_moments(sum, sum_log, clamped, static_cast<double>(batch.num_paths()));
}

std::vector<GapMoments> gap_moments_all(const PathBatch& batch, double incumbent, double eps) {
  if (!(eps > 0.0)) throw DomainError("gap_moments_all: clamp floor must be positive");
  const Index num_nodes = batch.num_nodes();
  std::vector<double> sum(static_cast<std::size_t>(num_nodes), 0.0);
  std::vector<double> sum_log(static_cast<std::size_t>(num_nodes), 0.0);
  std::vector<int> clamped(static_cast<std::size_t>(num_nodes), 0);
  for (Index p = 0; p < batch.num_paths(); ++p) {
    const double ymax = batch.path_max()(p);
    const double* col = batch.values().col(p).data();
    for (Index g = 0; g < num_nodes; ++g) {
      const auto k = static_cast<std::size_t>(g);
      double gap = ymax - std::max(col[g], incumbent);
      if (gap <= eps) {
        gap = eps;
        ++clamped[k];
      }
      sum[k] += gap;
      sum_log[k] += std::log(gap);
    }
  }
  const double n = static_cast<double>(batch.num_paths());
  std::vector<GapMoments> out(static_cast<std::size_t>(num_nodes));
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = finish_moments(sum[k], sum_log[k], clamped[k], n);
  }
  return out;
}

void write_sample_pairs_csv(std::ostream& out, const PathBatch& batch, Index x_index) {
  if (x_index < 0 || x_index >= batch.num_nodes()) {
    throw Error("write_sample_pairs_csv: node index out of range");
  }
  out << "ystar,y_x\n";
  for (Index p = 0; p < batch.num_paths(); ++p) {
    out << format_double(batch.path_max()(p)) << ',' << format_double(batch.value(p, x_index)) << '\n';
  }
}

}  // namespace vesopt
