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

#ifndef VESOPT_GRID_HPP
#define VESOPT_GRID_HPP

#include <span>
#include <vector>

#include "vesopt/gp.hpp"

namespace vesopt {

/// Axis-aligned box [lo_i, hi_i] per dimension.
struct Box {
  std::vector<double> lo;
  std::vector<double> hi;

  int dimension() const { return static_cast<int>(lo.size()); }
  bool contains(const Eigen::Ref<const Vector>& x) const;
  void validate() const;
};

/// Ordered set of candidate / sampling nodes, one per row.
class SampleGrid {
 public:
  SampleGrid() = default;
  explicit SampleGrid(Matrix points, std::vector<int> resolution = {});

  /// Tensor grid with resolution[i] evenly spaced nodes per axis, endpoints
  /// included. The first axis varies fastest.
  static SampleGrid regular(const Box& domain, std::span<const int> resolution);

  Index size() const { return points_.rows(); }
  bool empty() const { return points_.rows() == 0; }
  int dimension() const { return static_cast<int>(points_.cols()); }
  const Matrix& points() const { return points_; }
  auto point(Index g) const { return points_.row(g).transpose(); }
  const std::vector<int>& resolution() const { return resolution_; }

  /// This grid followed by the rows of extra; resolution is dropped.
  SampleGrid with_appended(const Eigen::Ref<const Matrix>& extra) const;

  /// Index of the node closest to x; lowest index on ties.
  Index nearest(const Eigen::Ref<const Vector>& x) const;

 private:
  Matrix points_;
  std::vector<int> resolution_;
};

}  // namespace vesopt

#endif  // VESOPT_GRID_HPP
