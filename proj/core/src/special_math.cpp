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

#include "vesopt/special_math.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "vesopt/error.hpp"

namespace vesopt {

namespace {

constexpr double kAsymptoticThreshold = 10.0;

// B_{2n} / (2n) for n = 1..8.
constexpr std::array<double, 8> kBernoulliOver2n = {
    1.0 / 6.0 / 2.0,   -1.0 / 30.0 / 4.0,    1.0 / 42.0 / 6.0,
    -1.0 / 30.0 / 8.0, 5.0 / 66.0 / 10.0,    -691.0 / 2730.0 / 12.0,
    7.0 / 6.0 / 14.0,  -3617.0 / 510.0 / 16.0,
};

// log(y) - psi(y) for y >= kAsymptoticThreshold.
double asymptotic_tail(double y) {
  const double inv2 = 1.0 / (y * y);
  // Horner in 1/y^2, highest order first.
  double s = 0.0;
  for (auto it = kBernoulliOver2n.rbegin(); it != kBernoulliOver2n.rend(); ++it) {
    s = (s + *it) * inv2;
  }
  return 0.5 / y + s;
}

void check_domain(double x, const char* fn) {
  if (!(x > 0.0)) {
    throw DomainError(std::string(fn) + ": argument must be positive");
  }
}

}  // namespace

double digamma(double x) {
  check_domain(x, "digamma");
  double shift = 0.0;
  while (x < kAsymptoticThreshold) {
    shift += 1.0 / x;
    x += 1.0;
  }
  return std::log(x) - asymptotic_tail(x) - shift;
}

double log_minus_digamma(double x) {
  check_domain(x, "log_minus_digamma");
  if (x >= kAsymptoticThreshold) {
    return asymptotic_tail(x);
  }
  double shift = 0.0;
  double y = x;
  while (y < kAsymptoticThreshold) {
    shift += 1.0 / y;
    y += 1.0;
  }
  return std::log(x / y) + asymptotic_tail(y) + shift;
}

double log_gamma(double x) {
  check_domain(x, "log_gamma");
  if (x == 1.0 || x == 2.0) return 0.0;
  // B_{2n} / (2n (2n - 1)) for n = 1..8.
  static constexpr std::array<double, 8> kStirling = {
      1.0 / 12.0,          -1.0 / 360.0,          1.0 / 1260.0,  -1.0 / 1680.0,
      1.0 / 1188.0,        -691.0 / 360360.0,     1.0 / 156.0,   -3617.0 / 122400.0,
  };
  double log_shift = 0.0;
  double prod = 1.0;
  while (x < kAsymptoticThreshold) {
    prod *= x;
    x += 1.0;
  }
  log_shift = std::log(prod);
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double s = 0.0;
  for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) {
    s = s * inv2 + *it;
  }
  s *= inv;
  constexpr double half_log_2pi = 0.91893853320467274178032973640561764;
  return (x - 0.5) * std::log(x) - x + half_log_2pi + s - log_shift;
}

NormalPdfCdf normal_pdf_cdf(double z) { return {normal_pdf(z), normal_cdf(z)}; }

double normal_pdf(double z) {
  constexpr double inv_sqrt_2pi = 0.5 * std::numbers::inv_sqrtpi * std::numbers::sqrt2;
  return inv_sqrt_2pi * std::exp(-0.5 * z * z);
}

double normal_cdf(double z) {
  // erfc keeps full relative accuracy in the lower tail.
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

void RootBracket::validate() const {
  if (!(lo < hi)) {
    throw DomainError("RootBracket: lo must be below hi");
  }
  if (!(tol > 0.0)) {
    throw DomainError("RootBracket: tol must be positive");
  }
}

namespace {

constexpr int kMaxExpansions = 60;

void expand_bracket(const ScalarFunction& f, double& lo, double& hi, double& flo, double& fhi) {
  int n = 0;
  while (flo <= 0.0 && n < kMaxExpansions) {
    if (lo > 0.0) {
      lo /= 10.0;
    } else {
      lo -= 9.0 * (hi - lo);
    }
    flo = f(lo);
    ++n;
  }
  n = 0;
  while (fhi >= 0.0 && n < kMaxExpansions) {
    if (hi > 0.0) {
      hi *= 10.0;
    } else {
      hi += 9.0 * (hi - lo);
    }
    fhi = f(hi);
    ++n;
  }
  if (!(flo > 0.0) || !(fhi < 0.0)) {
    throw RootFindingError("solve_monotone_root: no sign change after bracket expansion");
  }
}

double solve_impl(const ScalarFunction& f, const ScalarFunction* df, RootBracket bracket) {
  bracket.validate();
  double lo = bracket.lo;
  double hi = bracket.hi;
  double flo = f(lo);
  double fhi = f(hi);
  if (std::abs(flo) <= bracket.tol) return lo;
  if (std::abs(fhi) <= bracket.tol) return hi;
  expand_bracket(f, lo, hi, flo, fhi);

  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 4000; ++iter) {
    const double fx = f(x);
    if (std::abs(fx) <= bracket.tol) return x;
    if (fx > 0.0) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    double next = 0.5 * (lo + hi);
    if (df != nullptr) {
      const double d = (*df)(x);
      if (d < 0.0 && std::isfinite(d)) {
        const double newton = x - fx / d;
        if (newton > lo && newton < hi) next = newton;
      }
    }
    if (next <= lo || next >= hi) {
      // Bracket collapsed to adjacent doubles.
      const double best = std::abs(flo) < std::abs(fhi) ? lo : hi;
      if (std::abs(f(best)) <= bracket.tol) return best;
      throw RootFindingError("solve_monotone_root: tolerance not reachable in double precision");
    }
    x = next;
  }
  throw RootFindingError("solve_monotone_root: iteration limit reached");
}

}  // namespace

double solve_monotone_root(const ScalarFunction& f, RootBracket bracket) {
  return solve_impl(f, nullptr, bracket);
}

double solve_monotone_root(const ScalarFunction& f, const ScalarFunction& df, RootBracket bracket) {
  return solve_impl(f, &df, bracket);
}

}  // namespace vesopt
