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

#include "vesopt/grid.hpp"

#include <limits>

#include "vesopt/error.hpp"

namespace vesopt {

bool Box::contains(const Eigen::Ref<const Vector>& x) const {
  if (x.size() != dimension()) return false;
  for (int i = 0; i < dimension(); ++i) {
    if (x(i) < lo[i] || x(i) > hi[i]) return false;
  }
  return true;
}

void Box::validate() const {
  if (lo.empty() || lo.size() != hi.size()) {
    throw ConfigError("domain", "lower and upper bounds must be nonempty and equal in length");
  }
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (!(lo[i] < hi[i])) throw ConfigError("domain", "need lo < hi on every axis");
  }
}

SampleGrid::SampleGrid(Matrix points, std::vector<int> resolution)
    : points_(std::move(points)), resolution_(std::move(resolution)) {}

SampleGrid SampleGrid::regular(const Box& domain, std::span<const int> resolution) {
  domain.validate();
  if (static_cast<int>(resolution.size()) != domain.dimension()) {
    throw ConfigError("grid", "resolution must have one entry per dimension");
  }
  Index total = 1;
  for (int r : resolution) {
    if (r < 2) throw ConfigError("grid", "at least two nodes per axis");
    total *= r;
  }
  const int d = domain.dimension();
  Matrix pts(total, d);
  for (Index g = 0; g < total; ++g) {
    Index rem = g;
    for (int i = 0; i < d; ++i) {
      const Index k = rem % resolution[i];
      rem /= resolution[i];
      const double m = resolution[i] - 1;
      // Weighted form keeps integer-valued nodes exact.
      pts(g, i) = (domain.lo[i] * (m - static_cast<double>(k)) + domain.hi[i] * static_cast<double>(k)) / m;
    }
  }
  return SampleGrid(std::move(pts), std::vector<int>(resolution.begin(), resolution.end()));
}

SampleGrid SampleGrid::with_appended(const Eigen::Ref<const Matrix>& extra) const {
  if (extra.rows() == 0) return SampleGrid(points_);
  if (extra.cols() != points_.cols()) throw Error("SampleGrid: dimension mismatch");
  Matrix pts(points_.rows() + extra.rows(), points_.cols());
  pts << points_, extra;
  return SampleGrid(std::move(pts));
}

Index SampleGrid::nearest(const Eigen::Ref<const Vector>& x) const {
  Index best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (Index g = 0; g < size(); ++g) {
    const double d = (points_.row(g).transpose() - x).squaredNorm();
    if (d < best_d) {
      best_d = d;
      best = g;
    }
  }
  return best;
}

}  // namespace vesopt
