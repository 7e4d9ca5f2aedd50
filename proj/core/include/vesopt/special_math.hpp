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

#ifndef VESOPT_SPECIAL_MATH_HPP
#define VESOPT_SPECIAL_MATH_HPP

#include <functional>

namespace vesopt {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// Digamma function psi(x) = d/dx log Gamma(x) for x > 0.
///
/// Shifts the argument to x >= 10 with psi(x) = psi(x + 1) - 1/x and then
/// evaluates the asymptotic series through the B_16 Bernoulli term. The
/// first omitted term is below 4e-18 at x = 10, so the error is dominated
/// by rounding in the shift sum.
///
/// Throws DomainError for x <= 0 or NaN.
double digamma(double x);

/// log(x) - psi(x), evaluated without cancellation for large x.
///
/// This is the left-hand side of the Gamma shape equation; it decreases
/// strictly from +inf (x -> 0) to 0 (x -> inf) and behaves like 1/(2x).
double log_minus_digamma(double x);

/// log Gamma(x) for x > 0 by shifted Stirling series. Exactly zero at
/// x = 1 and x = 2. Unlike std::lgamma it touches no global state.
double log_gamma(double x);

struct NormalPdfCdf {
  double pdf;
  double cdf;
};

/// Standard normal density and distribution function at z.
NormalPdfCdf normal_pdf_cdf(double z);

double normal_pdf(double z);
double normal_cdf(double z);

/// Interval [lo, hi] expected to contain a root, plus the absolute residual
/// tolerance |f(x)| <= tol accepted at the returned point.
struct RootBracket {
  double lo;
  double hi;
  double tol;

  /// Throws DomainError unless lo < hi and tol > 0.
  void validate() const;
};

using ScalarFunction = std::function<double(double)>;

/// Root of a strictly decreasing function by bisection.
///
/// If f(lo) <= 0 or f(hi) >= 0 the bracket is widened by a factor of ten
/// on the offending side (dividing lo by ten when lo > 0 so positive-only
/// domains are respected), at most 60 times per side. Throws
/// RootFindingError if no sign change is found or the interval collapses
/// before |f| <= tol.
double solve_monotone_root(const ScalarFunction& f, RootBracket bracket);

/// Same contract, with Newton steps from the derivative df. A Newton step
/// that leaves the current bracket is replaced by a bisection step.
double solve_monotone_root(const ScalarFunction& f, const ScalarFunction& df,
                           RootBracket bracket);

}  // namespace vesopt

#endif  // VESOPT_SPECIAL_MATH_HPP
