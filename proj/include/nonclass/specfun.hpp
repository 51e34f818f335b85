// Copyright 2026 The nonclass Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Special functions behind the closed-form Q maxima: Laguerre polynomials,
// associated Laguerre polynomials, the terminating Gauss hypergeometric
// series of the squeezed-vacuum correlation, and log-factorials.
//
// Everything is evaluated by recurrence so that relative error stays near
// machine precision for orders up to a few hundred.

#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "nonclass/errors.hpp"

namespace nonclass::specfun {

// A polynomial value together with its degree in the evaluation variable.
template <typename Real>
struct PolyEval {
  Real value;
  int degree;
};

// L_p(u) from (k+1) L_{k+1} = (2k+1-u) L_k - k L_{k-1}.
template <typename Real>
Real laguerre(int p, Real u) {
  if (p < 0) throw DomainError("laguerre: negative order");
  Real prev = Real(1);
  if (p == 0) return prev;
  Real cur = Real(1) - u;
  for (int k = 1; k < p; ++k) {
    const Real next = ((Real(2 * k + 1) - u) * cur - Real(k) * prev) / Real(k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

// L_n^{(k)}(u) from (j+1) L_{j+1} = (2j+k+1-u) L_j - (j+k) L_{j-1}.
template <typename Real>
Real assoc_laguerre(int n, int k, Real u) {
  if (n < 0 || k < 0) throw DomainError("assoc_laguerre: negative order");
  Real prev = Real(1);
  if (n == 0) return prev;
  Real cur = Real(1 + k) - u;
  for (int j = 1; j < n; ++j) {
    const Real next =
        ((Real(2 * j + k + 1) - u) * cur - Real(j + k) * prev) / Real(j + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

// 2F1(-p/2, -(p-1)/2; 1; x) as a terminating sum. One of the two upper
// parameters is a non-positive integer or half-integer pair whose Pochhammer
// product vanishes after floor(p/2) terms, so the result is a polynomial of
// degree floor(p/2) in x. All terms are non-negative for x >= 0.
template <typename Real>
PolyEval<Real> hyp2f1_photon_poly(int p, Real x) {
  if (p < 0) throw DomainError("hyp2f1_photon: negative photon number");
  if (!(x >= Real(0) && x <= Real(1)))
    throw DomainError("hyp2f1_photon: argument outside [0, 1]");
  const Real a = -Real(p) / Real(2);
  const Real b = -Real(p - 1) / Real(2);
  const int degree = p / 2;
  Real term = Real(1);
  Real sum = Real(1);
  for (int k = 0; k < degree; ++k) {
    term *= (a + Real(k)) * (b + Real(k)) * x / (Real(k + 1) * Real(k + 1));
    sum += term;
  }
  return {sum, degree};
}

template <typename Real>
Real hyp2f1_photon(int p, Real x) {
  return hyp2f1_photon_poly(p, x).value;
}

namespace detail {

inline constexpr int kExactLogFactorialMax = 256;

inline const std::array<double, kExactLogFactorialMax + 1>& log_factorial_table() {
  static const auto table = [] {
    std::array<double, kExactLogFactorialMax + 1> t{};
    long double acc = 0.0L;
    t[0] = 0.0;
    for (int n = 1; n <= kExactLogFactorialMax; ++n) {
      acc += std::log(static_cast<long double>(n));
      t[n] = static_cast<double>(acc);
    }
    return t;
  }();
  return table;
}

}  // namespace detail

// ln(n!): exact summation up to 256, Stirling series beyond.
template <typename Real = double>
Real log_factorial(long long n) {
  if (n < 0) throw DomainError("log_factorial: negative argument");
  if (n <= detail::kExactLogFactorialMax)
    return static_cast<Real>(detail::log_factorial_table()[static_cast<std::size_t>(n)]);
  const Real x = static_cast<Real>(n);
  const Real inv = Real(1) / x;
  const Real inv2 = inv * inv;
  const Real series =
      inv * (Real(1) / Real(12) -
             inv2 * (Real(1) / Real(360) -
                     inv2 * (Real(1) / Real(1260) - inv2 / Real(1680))));
  return x * std::log(x) - x +
         Real(0.5) * std::log(Real(2) * std::numbers::pi_v<Real> * x) + series;
}

}  // namespace nonclass::specfun
