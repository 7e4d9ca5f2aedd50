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

#ifndef VESOPT_ACQUISITION_HPP
#define VESOPT_ACQUISITION_HPP

#include <iosfwd>
#include <span>
#include <vector>

#include "vesopt/gp.hpp"
#include "vesopt/grid.hpp"
#include "vesopt/path_sampler.hpp"

namespace vesopt {

/// Admissible candidate nodes; an empty mask admits every node.
using CandidateMask = std::vector<bool>;

/// Values closer than this fraction of the field's largest magnitude to the
/// maximum count as tied.
inline constexpr double kArgmaxRelTol = 1e-12;

/// Index of the largest value among admissible nodes, lowest index on ties.
/// Returns -1 if no node is admissible.
Index masked_argmax(std::span<const double> values, const CandidateMask& mask = {});

/// Acquisition values over a grid together with their maximizer.
struct AcquisitionField {
  std::vector<double> values;
  Index argmax_index = -1;

  AcquisitionField() = default;
  explicit AcquisitionField(std::vector<double> v, const CandidateMask& mask = {});

  double max_value() const { return values.at(static_cast<std::size_t>(argmax_index)); }
  Index size() const { return static_cast<Index>(values.size()); }
};

/// sigma * (z Phi(z) + phi(z)) with z = (mu - incumbent) / sigma;
/// max(mu - incumbent, 0) when sigma == 0.
double ei_closed_form(double mu, double sigma, double incumbent);

AcquisitionField ei_field(const GpPosterior& gp, const SampleGrid& grid, double incumbent,
                          const CandidateMask& mask = {});

/// Monte-Carlo EI per node from a shared batch: mean over paths of
/// max(y_x - incumbent, 0), with its standard error.
struct MonteCarloEi {
  AcquisitionField field;
  std::vector<double> std_errors;
};

/// Uses the first num_nodes nodes of the batch (all when negative).
MonteCarloEi mc_ei_field(const PathBatch& batch, double incumbent, Index num_nodes = -1,
                         const CandidateMask& mask = {});

inline constexpr double kMesSigmaFloor = 1e-9;
inline constexpr double kMesCdfFloor = 1e-16;

/// Entropy reduction of a normal truncated above at gamma standard
/// deviations: gamma phi(gamma) / (2 Phi(gamma)) - log Phi(gamma), with Phi
/// floored at kMesCdfFloor.
double mes_term(double gamma);

/// Max-value entropy search with the truncated-Gaussian approximation,
/// averaged over the supplied y* samples.
AcquisitionField mes_field(const GpPosterior& gp, const SampleGrid& grid,
                           std::span<const double> ystar_samples, const CandidateMask& mask = {});

/// Shifted Gamma variational density of y* given y_x, supported on
/// [shift, inf). k = 1 is the exponential family.
struct GammaVariational {
  double k = 1.0;
  double beta = 1.0;
  double shift = 0.0;

  void validate() const;
  double log_density(double ystar) const;
};

/// log(lambda) - lambda * mean_gap per node.
AcquisitionField eslb_exp(double lambda, std::span<const double> mean_gap,
                          const CandidateMask& mask = {});

/// k log(beta) - lgamma(k) + (k - 1) mean_log_gap - beta mean_gap.
double eslb_gamma_value(double k, double beta, const GapMoments& m);

/// eslb_gamma_value per node. The E[y*] term is common to every node under
/// shared paths and is dropped, so only gap moments are needed.
AcquisitionField eslb_gamma(const GammaVariational& v, std::span<const GapMoments> moments,
                            const CandidateMask& mask = {});

/// Stationary rate of the exponential bound: 1 / mean_gap.
double lambda_star(double mean_gap);

/// Writes "x1,...,xd,value" with one row per node.
void write_field_csv(std::ostream& out, const SampleGrid& grid, const AcquisitionField& field);

}  // namespace vesopt

#endif  // VESOPT_ACQUISITION_HPP
