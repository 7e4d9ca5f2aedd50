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

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "vesopt/error.hpp"
#include "vesopt/special_math.hpp"

namespace vesopt {
namespace {

TEST(MaskedArgmax, LowestIndexWinsTies) {
  const std::vector<double> v = {1.0, 3.0, 3.0, 2.0};
  EXPECT_EQ(masked_argmax(v), 1);
  EXPECT_EQ(masked_argmax(v, {true, false, true, true}), 2);
  EXPECT_EQ(masked_argmax(v, {false, false, false, false}), -1);
  EXPECT_THROW(masked_argmax(v, {true}), Error);
}

TEST(MaskedArgmax, RoundingLevelDifferencesAreTies) {
  const std::vector<double> v = {-1.8375361364257656, -1.8375361364257654, -1.9};
  EXPECT_EQ(masked_argmax(v), 0);
  const std::vector<double> w = {1.0, 1.0 + 1e-9};
  EXPECT_EQ(masked_argmax(w), 1);
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_EQ(masked_argmax(std::vector<double>{-inf, -inf}), 0);
  EXPECT_EQ(masked_argmax(std::vector<double>{1.0, inf}), 1);
  EXPECT_EQ(masked_argmax(std::vector<double>{std::nan(""), 2.0}), 1);
}

TEST(EiClosedForm, FrozenValue) {
  EXPECT_NEAR(ei_closed_form(1.0, 1.0, 0.0), 1.0833154705876862984, 1e-15);
  EXPECT_NEAR(ei_closed_form(0.0, 1.0, 0.0), 1.0 / std::sqrt(2.0 * std::numbers::pi), 1e-16);
}

TEST(EiClosedForm, ZeroSigmaIsPositivePart) {
  EXPECT_EQ(ei_closed_form(2.0, 0.0, 0.5), 1.5);
  EXPECT_EQ(ei_closed_form(0.0, 0.0, 0.5), 0.0);
  EXPECT_THROW(ei_closed_form(0.0, -1.0, 0.0), DomainError);
}

TEST(EiClosedForm, NonnegativeAndMonotone) {
  for (double sigma : {0.01, 0.3, 1.0, 5.0}) {
    double prev = -1.0;
    for (double mu = -10.0; mu <= 10.0; mu += 0.05) {
      const double ei = ei_closed_form(mu, sigma, 0.0);
      EXPECT_GE(ei, 0.0);
      EXPECT_GE(ei, mu - 4e-16 * std::abs(mu));
      EXPECT_GE(ei, prev);
      prev = ei;
    }
  }
}

TEST(EiClosedForm, AgreesWithMonteCarlo) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-2.0, 2.0), s(0.05, 3.0);
  std::normal_distribution<double> n01;
  constexpr int kDraws = 100000;
  for (int trial = 0; trial < 10; ++trial) {
    const double mu = u(rng), sigma = s(rng), inc = u(rng);
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < kDraws; ++i) {
      const double imp = std::max(mu + sigma * n01(rng) - inc, 0.0);
      sum += imp;
      sum_sq += imp * imp;
    }
    const double mean = sum / kDraws;
    const double se = std::sqrt((sum_sq / kDraws - mean * mean) / kDraws);
    EXPECT_LE(std::abs(mean - ei_closed_form(mu, sigma, inc)), 3.0 * se);
  }
}

TEST(McEiField, MatchesHandComputation) {
  Matrix v(2, 4);
  v << 1.0, 2.0, -1.0, 0.0,
       0.0, 0.0, 0.0, 4.0;
  const MonteCarloEi mc = mc_ei_field(PathBatch::from_values(v), 0.5);
  EXPECT_DOUBLE_EQ(mc.field.values[0], 0.5);
  EXPECT_DOUBLE_EQ(mc.field.values[1], 0.875);
  EXPECT_EQ(mc.field.argmax_index, 1);
  EXPECT_EQ(mc_ei_field(PathBatch::from_values(v), 0.5, 1).field.size(), 1);
  EXPECT_THROW(mc_ei_field(PathBatch::from_values(v), 0.5, 3), Error);
}

TEST(MesTerm, FrozenAndNonnegative) {
  EXPECT_NEAR(mes_term(0.0), 0.69314718055994530942, 1e-15);
  for (double g = -60.0; g <= 60.0; g += 0.01) {
    const double v = mes_term(g);
    EXPECT_TRUE(std::isfinite(v)) << g;
    EXPECT_GE(v, 0.0) << g;
  }
}

TEST(MesTerm, VanishesFarAboveMean) { EXPECT_LT(mes_term(12.0), 1e-30); }

TEST(GammaVariational, DensityIsNormalizedExponentialAtShapeOne) {
  const GammaVariational v{1.0, 2.0, 0.5};
  EXPECT_NEAR(v.log_density(1.5), std::log(2.0) - 2.0, 1e-15);
  EXPECT_EQ(v.log_density(0.0), -std::numeric_limits<double>::infinity());
  EXPECT_THROW((GammaVariational{0.0, 1.0, 0.0}.validate()), DomainError);
}

TEST(EslbGamma, ShapeOneReducesToExponential) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.01, 5.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<GapMoments> m(200);
    std::vector<double> gaps(200);
    for (std::size_t i = 0; i < m.size(); ++i) {
      m[i].mean_gap = u(rng);
      m[i].mean_log_gap = std::log(m[i].mean_gap) - u(rng);
      gaps[i] = m[i].mean_gap;
    }
    const double beta = u(rng);
    const AcquisitionField g = eslb_gamma({1.0, beta, 0.0}, m);
    const AcquisitionField e = eslb_exp(beta, gaps);
    for (std::size_t i = 0; i < m.size(); ++i) {
      EXPECT_NEAR(g.values[i], e.values[i], 1e-12);
      EXPECT_NEAR(eslb_gamma_value(1.0, beta, m[i]), e.values[i], 1e-12);
    }
    EXPECT_EQ(g.argmax_index, e.argmax_index);
  }
}

TEST(EslbExp, OptimalLambdaMaximizesBound) {
  const double gap = 0.37;
  const double lam = lambda_star(gap);
  const std::vector<double> one = {gap};
  const double best = eslb_exp(lam, one).values[0];
  for (double f : {0.5, 0.9, 0.99, 1.01, 1.1, 2.0}) {
    EXPECT_LT(eslb_exp(lam * f, one).values[0], best);
  }
  EXPECT_THROW(lambda_star(0.0), DomainError);
  EXPECT_THROW(eslb_exp(0.0, one), DomainError);
}

TEST(EslbExp, ArgmaxIsSmallestMeanGap) {
  const std::vector<double> gaps = {0.4, 0.2, 0.3, 0.2};
  EXPECT_EQ(eslb_exp(2.0, gaps).argmax_index, 1);
  EXPECT_EQ(eslb_exp(2.0, gaps, {true, false, true, true}).argmax_index, 3);
}

TEST(WriteFieldCsv, HeaderAndLayout) {
  const SampleGrid grid = SampleGrid::regular(Box{{0.0, 0.0}, {1.0, 1.0}}, std::vector<int>{2, 2});
  const AcquisitionField f(std::vector<double>{0.1, 0.2, 0.3, 0.4});
  std::ostringstream out;
  write_field_csv(out, grid, f);
  EXPECT_EQ(out.str(),
            "x1,x2,value\n0,0,0.10000000000000001\n1,0,0.20000000000000001\n"
            "0,1,0.29999999999999999\n1,1,0.40000000000000002\n");
  std::ostringstream bad;
  EXPECT_THROW(write_field_csv(bad, grid, AcquisitionField(std::vector<double>{1.0})), Error);
}

}  // namespace
}  // namespace vesopt
