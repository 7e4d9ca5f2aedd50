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

#include "vesopt/gp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "vesopt/error.hpp"

namespace vesopt {

namespace {

constexpr double kSqrt5 = 2.23606797749978969640917366873127624;

struct Factorization {
  Eigen::LLT<Matrix> llt;
  double jitter;
};

// Cholesky of gram + jitter I over the jitter ladder, or nullopt.
std::optional<Factorization> factor_with_jitter(const Matrix& gram, double sigma_f2) {
  for (double rel = kJitterStart; rel <= kJitterMax * (1.0 + 1e-9); rel *= 10.0) {
    const double jitter = rel * sigma_f2;
    Matrix a = gram;
    a.diagonal().array() += jitter;
    Eigen::LLT<Matrix> llt(a);
    if (llt.info() == Eigen::Success && llt.matrixLLT().diagonal().minCoeff() > 0.0) {
      return Factorization{std::move(llt), jitter};
    }
  }
  return std::nullopt;
}

double matern52_scaled(double sigma_f2, double inv_l, double r) {
  const double s = kSqrt5 * r * inv_l;
  return sigma_f2 * (1.0 + s + s * s / 3.0) * std::exp(-s);
}

Matrix pairwise_distances(const Matrix& pts) {
  const Index n = pts.rows();
  Matrix d(n, n);
  for (Index i = 0; i < n; ++i) {
    d(i, i) = 0.0;
    for (Index j = 0; j < i; ++j) {
      d(i, j) = d(j, i) = (pts.row(i) - pts.row(j)).norm();
    }
  }
  return d;
}

Matrix gram_from_distances(const Matrix& dist, const KernelParams& p) {
  const double sf2 = p.sigma_f * p.sigma_f;
  const double inv_l = 1.0 / p.sigma_l;
  return dist.unaryExpr([&](double r) { return matern52_scaled(sf2, inv_l, r); });
}

// Log marginal likelihood with distances precomputed; -inf if singular.
double lml_from_distances(const Matrix& dist, const Vector& y, const KernelParams& p) {
  const Index n = y.size();
  const auto fac = factor_with_jitter(gram_from_distances(dist, p), p.sigma_f * p.sigma_f);
  if (!fac) return -std::numeric_limits<double>::infinity();
  const Vector w = fac->llt.matrixL().solve(y);
  const double log_det_half = fac->llt.matrixLLT().diagonal().array().log().sum();
  return -0.5 * w.squaredNorm() - log_det_half -
         0.5 * static_cast<double>(n) * std::log(2.0 * std::numbers::pi);
}

}  // namespace

Dataset::Dataset(Matrix pts, Vector vals) : points(std::move(pts)), values(std::move(vals)) {
  if (points.rows() != values.size()) {
    throw Error("Dataset: points and values differ in length");
  }
}

double Dataset::incumbent() const { return values(incumbent_index()); }

Index Dataset::incumbent_index() const {
  if (empty()) throw Error("Dataset: incumbent of an empty dataset");
  Index best = 0;
  for (Index i = 1; i < values.size(); ++i) {
    if (values(i) > values(best)) best = i;
  }
  return best;
}

void Dataset::add(const Eigen::Ref<const Vector>& x, double y) {
  if (points.cols() == 0 && points.rows() == 0) {
    points.resize(0, x.size());
  }
  if (x.size() != points.cols()) {
    throw Error("Dataset::add: dimension mismatch");
  }
  const Index n = points.rows();
  points.conservativeResize(n + 1, Eigen::NoChange);
  points.row(n) = x.transpose();
  values.conservativeResize(n + 1);
  values(n) = y;
}

void Dataset::validate() const {
  if (points.rows() != values.size()) {
    throw Error("Dataset: points and values differ in length");
  }
  for (Index i = 0; i < points.rows(); ++i) {
    for (Index j = 0; j < i; ++j) {
      if ((points.row(i) - points.row(j)).squaredNorm() == 0.0) {
        throw SingularDataError("Dataset: duplicate input at rows " + std::to_string(j) +
                                " and " + std::to_string(i));
      }
    }
  }
}

double matern52(const KernelParams& p, double r) {
  return matern52_scaled(p.sigma_f * p.sigma_f, 1.0 / p.sigma_l, r);
}

double kernel_eval(const KernelParams& p, const Eigen::Ref<const Vector>& x,
                   const Eigen::Ref<const Vector>& x_prime) {
  return matern52(p, (x - x_prime).norm());
}

Matrix kernel_matrix(const KernelParams& p, const Eigen::Ref<const Matrix>& a,
                     const Eigen::Ref<const Matrix>& b) {
  const double sf2 = p.sigma_f * p.sigma_f;
  const double inv_l = 1.0 / p.sigma_l;
  Matrix k(a.rows(), b.rows());
  for (Index j = 0; j < b.rows(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      k(i, j) = matern52_scaled(sf2, inv_l, (a.row(i) - b.row(j)).norm());
    }
  }
  return k;
}

GpPosterior::GpPosterior(Dataset data, KernelParams params)
    : data_(std::move(data)), params_(params) {
  if (!(params_.sigma_f > 0.0) || !(params_.sigma_l > 0.0)) {
    throw DomainError("GpPosterior: kernel parameters must be positive");
  }
  data_.validate();
  const Index n = data_.size();
  if (n == 0) {
    chol_.resize(0, 0);
    alpha_.resize(0);
    return;
  }
  const Matrix gram = kernel_matrix(params_, data_.points, data_.points);
  auto fac = factor_with_jitter(gram, params_.sigma_f * params_.sigma_f);
  if (!fac) {
    throw SingularDataError("GpPosterior: Gram matrix not factorable at maximum jitter");
  }
  jitter_ = fac->jitter;
  chol_ = fac->llt.matrixL();
  alpha_ = fac->llt.solve(data_.values);
}

Matrix GpPosterior::whitened_cross(const Eigen::Ref<const Matrix>& xs) const {
  Matrix kx = kernel_matrix(params_, data_.points, xs);
  chol_.triangularView<Eigen::Lower>().solveInPlace(kx);
  return kx;
}

double GpPosterior::mean(const Eigen::Ref<const Vector>& x) const {
  if (data_.empty()) return 0.0;
  double m = 0.0;
  for (Index i = 0; i < data_.size(); ++i) {
    m += kernel_eval(params_, data_.points.row(i).transpose(), x) * alpha_(i);
  }
  return m;
}

double GpPosterior::raw_variance(const Eigen::Ref<const Vector>& x) const {
  const double prior = params_.sigma_f * params_.sigma_f;
  if (data_.empty()) return prior;
  const Matrix v = whitened_cross(x.transpose());
  return prior - v.squaredNorm();
}

double GpPosterior::variance(const Eigen::Ref<const Vector>& x) const {
  return std::max(raw_variance(x), 0.0);
}

Vector GpPosterior::means(const Eigen::Ref<const Matrix>& xs) const {
  if (data_.empty()) return Vector::Zero(xs.rows());
  return kernel_matrix(params_, xs, data_.points) * alpha_;
}

Vector GpPosterior::variances(const Eigen::Ref<const Matrix>& xs) const {
  const double prior = params_.sigma_f * params_.sigma_f;
  if (data_.empty()) return Vector::Constant(xs.rows(), prior);
  const Matrix v = whitened_cross(xs);
  return (prior - v.colwise().squaredNorm().array()).max(0.0).matrix().transpose();
}

Matrix GpPosterior::covariance(const Eigen::Ref<const Matrix>& xs) const {
  Matrix cov = kernel_matrix(params_, xs, xs);
  if (!data_.empty()) {
    const Matrix v = whitened_cross(xs);
    cov.selfadjointView<Eigen::Lower>().rankUpdate(v.transpose(), -1.0);
    cov.triangularView<Eigen::StrictlyUpper>() = cov.transpose();
  }
  cov.diagonal() = cov.diagonal().cwiseMax(0.0);
  return cov;
}

GpPosterior fit_posterior(const Dataset& data, const KernelParams& params) {
  return GpPosterior(data, params);
}

double posterior_mean(const GpPosterior& gp, const Eigen::Ref<const Vector>& x) {
  return gp.mean(x);
}

Matrix posterior_cov(const GpPosterior& gp, const Eigen::Ref<const Matrix>& xs) {
  return gp.covariance(xs);
}

double log_marginal_likelihood(const Dataset& data, const KernelParams& params) {
  data.validate();
  const double lml = lml_from_distances(pairwise_distances(data.points), data.values, params);
  if (!std::isfinite(lml)) {
    throw SingularDataError("log_marginal_likelihood: Gram matrix not factorable");
  }
  return lml;
}

void HyperparameterBounds::validate() const {
  if (!(sigma_f_lo > 0.0 && sigma_f_lo < sigma_f_hi)) {
    throw ConfigError("sigma_f bounds", "need 0 < lo < hi");
  }
  if (!(sigma_l_lo > 0.0 && sigma_l_lo < sigma_l_hi)) {
    throw ConfigError("sigma_l bounds", "need 0 < lo < hi");
  }
}

KernelParams fit_hyperparameters(const Dataset& data, const HyperparameterBounds& bounds) {
  bounds.validate();
  if (data.size() < 2) {
    return {std::clamp(1.0, bounds.sigma_f_lo, bounds.sigma_f_hi),
            std::clamp(1.0, bounds.sigma_l_lo, bounds.sigma_l_hi)};
  }
  data.validate();
  const Matrix dist = pairwise_distances(data.points);
  const auto objective = [&](double log_f, double log_l) {
    return lml_from_distances(dist, data.values, {std::exp(log_f), std::exp(log_l)});
  };

  constexpr int kGrid = 16;
  const double lf_lo = std::log(bounds.sigma_f_lo), lf_hi = std::log(bounds.sigma_f_hi);
  const double ll_lo = std::log(bounds.sigma_l_lo), ll_hi = std::log(bounds.sigma_l_hi);
  const double df = (lf_hi - lf_lo) / (kGrid - 1);
  const double dl = (ll_hi - ll_lo) / (kGrid - 1);

  double best_f = lf_lo, best_l = ll_lo;
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      const double lf = lf_lo + i * df;
      const double ll = ll_lo + j * dl;
      const double v = objective(lf, ll);
      if (v > best) {
        best = v;
        best_f = lf;
        best_l = ll;
      }
    }
  }
  if (!std::isfinite(best)) {
    throw SingularDataError("fit_hyperparameters: no grid point yields a factorable Gram matrix");
  }

  // Golden-section on one log-coordinate over [center - half, center + half].
  const auto golden = [&](double center, double half, double lo_bound, double hi_bound,
                          const auto& eval) {
    constexpr double kInvPhi = 0.6180339887498948482;
    double a = std::max(center - half, lo_bound);
    double b = std::min(center + half, hi_bound);
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = eval(c), fd = eval(d);
    for (int it = 0; it < 40 && (b - a) > 1e-6; ++it) {
      if (fc >= fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - kInvPhi * (b - a);
        fc = eval(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + kInvPhi * (b - a);
        fd = eval(d);
      }
    }
    return fc >= fd ? std::pair{c, fc} : std::pair{d, fd};
  };

  for (int sweep = 0; sweep < 3; ++sweep) {
    const auto [lf, vf] = golden(best_f, df, lf_lo, lf_hi,
                                 [&](double t) { return objective(t, best_l); });
    if (vf > best) {
      best = vf;
      best_f = lf;
    }
    const auto [ll, vl] = golden(best_l, dl, ll_lo, ll_hi,
                                 [&](double t) { return objective(best_f, t); });
    if (vl > best) {
      best = vl;
      best_l = ll;
    }
  }
  return {std::clamp(std::exp(best_f), bounds.sigma_f_lo, bounds.sigma_f_hi),
          std::clamp(std::exp(best_l), bounds.sigma_l_lo, bounds.sigma_l_hi)};
}

Standardizer Standardizer::fit(const Eigen::Ref<const Vector>& values) {
  if (values.size() < 2) return {};
  const double mean = values.mean();
  const double var = (values.array() - mean).square().mean();
  const double sd = std::sqrt(var);
  if (!(sd > 0.0) || !std::isfinite(sd)) return {mean, 1.0};
  return {mean, sd};
}

Dataset Standardizer::apply(const Dataset& data) const {
  Dataset out = data;
  out.values = (data.values.array() - offset) / scale;
  return out;
}

}  // namespace vesopt
