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

#ifndef VESOPT_OBJECTIVES_HPP
#define VESOPT_OBJECTIVES_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vesopt/grid.hpp"

namespace vesopt {

using ObjectiveFunction = std::function<double(std::span<const double>)>;

/// Black-box objective to be maximized, with its known maximum f_star.
struct Objective {
  std::string name;
  Box domain;
  ObjectiveFunction eval;
  double f_star = 0.0;

  int dimension() const { return domain.dimension(); }
  double operator()(const Eigen::Ref<const Vector>& x) const;
};

/// Validates an objective and spot-checks f_star >= eval(x) on num_checks
/// uniform points (fixed seed). Throws InvalidFStarError or ConfigError.
Objective make_objective(std::string name, Box domain, ObjectiveFunction eval, double f_star,
                         int num_checks = 100000);

// Standard minimization forms.
double rosenbrock(double x, double y);
double three_hump_camel(double x, double y);
double himmelblau(double x, double y);

/// Negated Rosenbrock on [-2, 2]^2, negated Three-Hump Camel on [-2, 2]^2
/// and negated Himmelblau on [-5, 5]^2, all with f_star = 0.
const std::vector<Objective>& objective_registry();

std::optional<Objective> find_objective(std::string_view name);

/// x -> a f(x) + b with a > 0; f_star transforms accordingly.
Objective affine_transformed(const Objective& base, double a, double b);

}  // namespace vesopt

#endif  // VESOPT_OBJECTIVES_HPP
