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

#include "vesopt/objectives.hpp"

#include <cmath>
#include <random>

#include "vesopt/error.hpp"
#include "vesopt/rng.hpp"

namespace vesopt {

double Objective::operator()(const Eigen::Ref<const Vector>& x) const {
  const Vector copy = x;
  return eval(std::span<const double>(copy.data(), static_cast<std::size_t>(copy.size())));
}

Objective make_objective(std::string name, Box domain, ObjectiveFunction eval, double f_star,
                         int num_checks) {
  domain.validate();
  if (!eval) throw ConfigError("objective", "missing evaluation function");
  Objective obj{std::move(name), std::move(domain), std::move(eval), f_star};
  Rng rng = make_rng(0x0b1ec7, 0);
  std::vector<double> x(static_cast<std::size_t>(obj.dimension()));
  for (int n = 0; n < num_checks; ++n) {
    for (int i = 0; i < obj.dimension(); ++i) {
      x[static_cast<std::size_t>(i)] =
          std::uniform_real_distribution<double>(obj.domain.lo[static_cast<std::size_t>(i)],
                                                 obj.domain.hi[static_cast<std::size_t>(i)])(rng);
    }
    if (obj.eval(x) > f_star + 1e-12) {
      throw InvalidFStarError("objective " + obj.name + ": value above declared f_star");
    }
  }
  return obj;
}

double rosenbrock(double x, double y) {
  const double a = 1.0 - x;
  const double b = y - x * x;
  return a * a + 100.0 * b * b;
}

double three_hump_camel(double x, double y) {
  const double x2 = x * x;
  return 2.0 * x2 - 1.05 * x2 * x2 + x2 * x2 * x2 / 6.0 + x * y + y * y;
}

double himmelblau(double x, double y) {
  const double a = x * x + y - 11.0;
  const double b = x + y * y - 7.0;
  return a * a + b * b;
}

const std::vector<Objective>& objective_registry() {
  static const std::vector<Objective> registry = [] {
    std::vector<Objective> r;
    r.push_back(make_objective("rosenbrock", Box{{-2.0, -2.0}, {2.0, 2.0}},
                               [](std::span<const double> x) { return -rosenbrock(x[0], x[1]); },
                               0.0));
    r.push_back(make_objective("three_hump_camel", Box{{-2.0, -2.0}, {2.0, 2.0}},
                               [](std::span<const double> x) { return -three_hump_camel(x[0], x[1]); },
                               0.0));
    r.push_back(make_objective("himmelblau", Box{{-5.0, -5.0}, {5.0, 5.0}},
                               [](std::span<const double> x) { return -himmelblau(x[0], x[1]); },
                               0.0));
    return r;
  }();
  return registry;
}

std::optional<Objective> find_objective(std::string_view name) {
  for (const Objective& o : objective_registry()) {
    if (o.name == name) return o;
  }
  return std::nullopt;
}

Objective affine_transformed(const Objective& base, double a, double b) {
  if (!(a > 0.0)) throw ConfigError("scale", "affine scale must be positive");
  Objective out = base;
  out.name = base.name + "_affine";
  out.eval = [f = base.eval, a, b](std::span<const double> x) { return a * f(x) + b; };
  out.f_star = a * base.f_star + b;
  return out;
}

}  // namespace vesopt
