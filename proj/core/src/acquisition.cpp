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

#include "vesopt/acquisition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "vesopt/csv.hpp"
#include "vesopt/error.hpp"
#include "vesopt/special_math.hpp"

namespace vesopt {

Index masked_argmax(std::span<const double> values, const CandidateMask& mask) {
  if (!mask.empty() && mask.size() != values.size()) {
    throw Error("masked_argmax: mask length differs from the field");
  }
  const auto admissible = [&](std::size_t g) { return mask.empty() || mask[g]; };
  double best = -std::numeric_limits<double>::infinity();
  double scale = 0.0;
  bool any = false;
  for (std::size_t g = 0; g < values.size(); ++g) {
    if (!admissible(g) || std::isnan(values[g])) continue;
    any = true;
    best = std::max(best, values[g]);
    scale = std::max(scale, std::abs(values[g]));
  }
  if (!any) return -1;
  const double floor = std::isfinite(scale) ? best - kArgmaxRelTol * scale : best;
  for (std::size_t g = 0; g < values.size(); ++g) {
    if (admissible(g) && values[g] >= floor) return static_cast<Index>(g);
  }
  return -1;
}

AcquisitionField::AcquisitionField(std::vector<double> v, const CandidateMask& mask)
    : values(std::move(v)), argmax_index(masked_argmax(values, mask)) {}

double ei_closed_form(double mu, double sigma, double incumbent) {
  if (sigma < 0.0) throw DomainError("ei_closed_form: sigma must be nonnegative");
  if (sigma == 0.0) return std::max(mu - incumbent, 0.0);
  const double z = (mu - incumbent) / sigma;
  const auto [pdf, cdf] = normal_pdf_cdf(z);
  return std::max(sigma * (z * cdf + pdf), 0.0);
}

AcquisitionField ei_field(const GpPosterior& gp, const SampleGrid& grid, double incumbent,
                          const CandidateMask& mask) {
  if (grid.empty()) throw Error("ei_field: empty grid");
  const Vector mu = gp.means(grid.points());
  const Vector var = gp.variances(grid.points());
  std::vector<double> values(static_cast<std::size_t>(grid.size()));
  for (Index g = 0; g < grid.size(); ++g) {
    values[static_cast<std::size_t>(g)] = ei_closed_form(mu(g), std::sqrt(var(g)), incumbent);
  }
  return AcquisitionField(std::move(values), mask);
}

MonteCarloEi mc_ei_field(const PathBatch& batch, double incumbent, Index num_nodes,
                         const CandidateMask& mask) {
  if (num_nodes < 0) num_nodes = batch.num_nodes();
  if (num_nodes > batch.num_nodes()) throw Error("mc_ei_field: more nodes than the batch holds");
  const auto n = static_cast<std::size_t>(num_nodes);
  std::vector<double> sum(n, 0.0), sum_sq(n, 0.0);
  for (Index p = 0; p < batch.num_paths(); ++p) {
    const double* col = batch.values().col(p).data();
    for (std::size_t g = 0; g < n; ++g) {
      const double imp = std::max(col[g] - incumbent, 0.0);
      sum[g] += imp;
      sum_sq[g] += imp * imp;
    }
  }
  const double paths = static_cast<double>(batch.num_paths());
  MonteCarloEi out;
  out.std_errors.resize(n);
  std::vector<double> mean(n);
  for (std::size_t g = 0; g < n; ++g) {
    mean[g] = sum[g] / paths;
    const double var = std::max(sum_sq[g] / paths - mean[g] * mean[g], 0.0) * paths / (paths - 1.0);
    out.std_errors[g] = std::sqrt(var / paths);
  }
  out.field = AcquisitionField(std::move(mean), mask);
  return out;
}

double mes_term(double gamma) {
  const auto [pdf, raw_cdf] = normal_pdf_cdf(gamma);
  const double cdf = std::max(raw_cdf, kMesCdfFloor);
  return gamma * pdf / (2.0 * cdf) - std::log(cdf);
}

AcquisitionField mes_field(const GpPosterior& gp, const SampleGrid& grid,
                           std::span<const double> ystar_samples, const CandidateMask& mask) {
  if (ystar_samples.empty()) throw Error("mes_field: no y* samples");
  if (grid.empty()) throw Error("mes_field: empty grid");
  const Vector mu = gp.means(grid.points());
  const Vector var = gp.variances(grid.points());
  const double inv_n = 1.0 / static_cast<double>(ystar_samples.size());
  std::vector<double> values(static_cast<std::size_t>(grid.size()));
  for (Index g = 0; g < grid.size(); ++g) {
    const double sigma = std::max(std::sqrt(var(g)), kMesSigmaFloor);
    const double inv_sigma = 1.0 / sigma;
    double acc = 0.0;
    for (double s : ystar_samples) acc += mes_term((s - mu(g)) * inv_sigma);
    values[static_cast<std::size_t>(g)] = acc * inv_n;
  }
  return AcquisitionField(std::move(values), mask);
}

void GammaVariational::validate() const {
  if (!(k > 0.0) || !(beta > 0.0)) {
    throw DomainError("GammaVariational: k and beta must be positive");
  }
}

double GammaVariational::log_density(double ystar) const {
  const double gap = ystar - shift;
  if (gap < 0.0) return -std::numeric_limits<double>::infinity();
  return k * std::log(beta) - log_gamma(k) + (k - 1.0) * std::log(gap) - beta * gap;
}

AcquisitionField eslb_exp(double lambda, std::span<const double> mean_gap, const CandidateMask& mask) {
  if (!(lambda > 0.0)) throw DomainError("eslb_exp: lambda must be positive");
  const double log_lambda = std::log(lambda);
  std::vector<double> values(mean_gap.size());
  for (std::size_t g = 0; g < mean_gap.size(); ++g) {
    values[g] = log_lambda - lambda * mean_gap[g];
  }
  return AcquisitionField(std::move(values), mask);
}

double eslb_gamma_value(double k, double beta, const GapMoments& m) {
  return k * std::log(beta) - log_gamma(k) + (k - 1.0) * m.mean_log_gap - beta * m.mean_gap;
}

AcquisitionField eslb_gamma(const GammaVariational& v, std::span<const GapMoments> moments,
                            const CandidateMask& mask) {
  v.validate();
  const double head = v.k * std::log(v.beta) - log_gamma(v.k);
  const double w = v.k - 1.0;
  std::vector<double> values(moments.size());
  for (std::size_t g = 0; g < moments.size(); ++g) {
    values[g] = head + w * moments[g].mean_log_gap - v.beta * moments[g].mean_gap;
  }
  return AcquisitionField(std::move(values), mask);
}

double lambda_star(double mean_gap) {
  if (!(mean_gap > 0.0)) throw DomainError("lambda_star: mean gap must be positive");
  return 1.0 / mean_gap;
}

void write_field_csv(std::ostream& out, const SampleGrid& grid, const AcquisitionField& field) {
  if (field.size() != grid.size()) throw Error("write_field_csv: field and grid differ in size");
  for (int i = 0; i < grid.dimension(); ++i) out << 'x' << (i + 1) << ',';
  out << "value\n";
  for (Index g = 0; g < grid.size(); ++g) {
    for (int i = 0; i < grid.dimension(); ++i) out << format_double(grid.points()(g, i)) << ',';
    out << format_double(field.values[static_cast<std::size_t>(g)]) << '\n';
  }
}

}  // namespace vesopt
