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

#ifndef VESOPT_GP_HPP
#define VESOPT_GP_HPP

#include <Eigen/Dense>

namespace vesopt {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Noise-free observations. Inputs are stored one per row.
struct Dataset {
  Matrix points;  // n x d
  Vector values;  // n

  Dataset() = default;
  explicit Dataset(int dimension) : points(0, dimension), values(0) {}
  Dataset(Matrix pts, Vector vals);

  Index size() const { return values.size(); }
  bool empty() const { return values.size() == 0; }
  int dimension() const { return static_cast<int>(points.cols()); }

  /// Best observed value y*_t. Requires a nonempty dataset.
  double incumbent() const;
  Index incumbent_index() const;

  void add(const Eigen::Ref<const Vector>& x, double y);

  /// Throws SingularDataError on exactly duplicated inputs and Error on
  /// shape mismatches.
  void validate() const;
};

/// Matern 5/2 output scale sigma_f and length scale sigma_l.
struct KernelParams {
  double sigma_f = 1.0;
  double sigma_l = 1.0;
};

/// k(r) = sigma_f^2 (1 + sqrt5 r / l + 5 r^2 / (3 l^2)) exp(-sqrt5 r / l)
double matern52(const KernelParams& p, double r);

double kernel_eval(const KernelParams& p, const Eigen::Ref<const Vector>& x,
                   const Eigen::Ref<const Vector>& x_prime);

/// Cross-covariance between the rows of a and the rows of b.
Matrix kernel_matrix(const KernelParams& p, const Eigen::Ref<const Matrix>& a,
                     const Eigen::Ref<const Matrix>& b);

/// Jitter ladder used whenever a Gram matrix is factored: start at
/// kJitterStart * sigma_f^2 and multiply by ten up to kJitterMax * sigma_f^2.
inline constexpr double kJitterStart = 1e-10;
inline constexpr double kJitterMax = 1e-4;

/// Immutable fitted GP. Holds the Cholesky factor of K + jitter I and
/// alpha = (K + jitter I)^{-1} y. An empty dataset yields the prior.
class GpPosterior {
 public:
  GpPosterior(Dataset data, KernelParams params);

  const Dataset& data() const { return data_; }
  const KernelParams& params() const { return params_; }
  const Matrix& chol() const { return chol_; }
  const Vector& alpha() const { return alpha_; }
  double jitter() const { return jitter_; }
  int dimension() const { return data_.dimension(); }

  double mean(const Eigen::Ref<const Vector>& x) const;
  /// Pointwise variance, clamped at zero.
  double variance(const Eigen::Ref<const Vector>& x) const;
  /// Pointwise variance before clamping.
  double raw_variance(const Eigen::Ref<const Vector>& x) const;

  /// Means and clamped variances at the rows of xs.
  Vector means(const Eigen::Ref<const Matrix>& xs) const;
  Vector variances(const Eigen::Ref<const Matrix>& xs) const;

  /// Full posterior covariance at the rows of xs; symmetric, diagonal
  /// clamped at zero.
  Matrix covariance(const Eigen::Ref<const Matrix>& xs) const;

 private:
  // L^{-1} k(X_train, xs).
  Matrix whitened_cross(const Eigen::Ref<const Matrix>& xs) const;

  Dataset data_;
  KernelParams params_;
  Matrix chol_;
  Vector alpha_;
  double jitter_ = 0.0;
};

GpPosterior fit_posterior(const Dataset& data, const KernelParams& params);
double posterior_mean(const GpPosterior& gp, const Eigen::Ref<const Vector>& x);
Matrix posterior_cov(const GpPosterior& gp, const Eigen::Ref<const Matrix>& xs);

/// -1/2 y^T (K + jI)^{-1} y - sum log diag(L) - n/2 log(2 pi).
double log_marginal_likelihood(const Dataset& data, const KernelParams& params);

struct HyperparameterBounds {
  double sigma_f_lo = 1e-3;
  double sigma_f_hi = 1e3;
  double sigma_l_lo = 1e-3;
  double sigma_l_hi = 1e3;

  void validate() const;
};

/// Maximum-likelihood (sigma_f, sigma_l).
///
/// Evaluates a 16 x 16 log-spaced grid over the bounds, then refines the
/// best grid point with coordinate-wise golden-section search in log space.
/// Refinement only ever replaces the incumbent with a strictly better
/// likelihood, so the result dominates every grid point. Datasets with
/// fewer than two points return (1, 1) clipped to the bounds.
KernelParams fit_hyperparameters(const Dataset& data, const HyperparameterBounds& bounds = {});

/// Affine map y -> (y - offset) / scale used to standardize observations.
struct Standardizer {
  double offset = 0.0;
  double scale = 1.0;

  /// Mean and population standard deviation of values; identity for fewer
  /// than two values or zero spread.
  static Standardizer fit(const Eigen::Ref<const Vector>& values);

  double forward(double y) const { return (y - offset) / scale; }
  double inverse(double z) const { return z * scale + offset; }
  Dataset apply(const Dataset& data) const;
};

}  // namespace vesopt

#endif  // VESOPT_GP_HPP
