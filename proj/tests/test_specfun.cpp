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


#include <cmath>
#include <random>

#include <doctest.h>

#include "nonclass/specfun.hpp"

using namespace nonclass::specfun;

namespace {

// Explicit series L_n^{(k)}(u) = sum_j (-1)^j C(n+k, n-j) u^j / j!, summed
// in long double with exact integer binomials to tame the cancellation.
double laguerre_series(int n, int k, double u) {
  long double sum = 0.0L;
  long double term = 1.0L;  // C(n+k, n) at j = 0
  for (int i = 1; i <= n; ++i) term = term * (k + i) / i;
  for (int j = 0; j <= n; ++j) {
    sum += term;
    // C(n+k, n-j-1) / C(n+k, n-j) = (n-j) / (k+j+1)
    term *= -static_cast<long double>(u) * (n - j) / ((k + j + 1.0L) * (j + 1.0L));
  }
  return static_cast<double>(sum);
}

// Gauss summation of 2F1(-p/2, -(p-1)/2; 1; 1).
double gauss_sum(int p) {
  return std::exp(std::lgamma(p + 0.5) - std::lgamma(1.0 + p / 2.0) - std::lgamma((p + 1) / 2.0));
}

}  // namespace

TEST_CASE("laguerre low orders") {
  CHECK(laguerre(0, 3.0) == 1.0);
  CHECK(laguerre(1, 3.0) == doctest::Approx(-2.0));
  CHECK(laguerre(2, -1.0) == doctest::Approx(3.5));
  CHECK(laguerre(5, -4.0) == doctest::Approx(laguerre_series(5, 0, -4.0)).epsilon(1e-13));
  CHECK_THROWS_AS(laguerre(-1, 0.0), nonclass::DomainError);
}

TEST_CASE("assoc_laguerre matches explicit series") {
  CHECK(assoc_laguerre(1, 2, 1.0) == doctest::Approx(2.0));
  for (int n : {0, 3, 7, 12})
    for (int k : {0, 1, 4, 9})
      for (double u : {-2.5, 0.3, 1.7, 6.0})
        CHECK(assoc_laguerre(n, k, u) ==
              doctest::Approx(laguerre_series(n, k, u)).epsilon(1e-10).scale(1.0));
  CHECK(assoc_laguerre(6, 0, 2.2) == doctest::Approx(laguerre(6, 2.2)).epsilon(1e-14));
}

TEST_CASE("laguerre at negative argument is positive") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-50.0, 0.0);
  for (int i = 0; i < 1000; ++i) {
    const int p = static_cast<int>(rng() % 51);
    const double x = u(rng);
    REQUIRE(laguerre(p, x) > 0.0);
  }
}

TEST_CASE("hyp2f1_photon small cases") {
  CHECK(hyp2f1_photon(0, 0.7) == 1.0);
  CHECK(hyp2f1_photon(1, 0.7) == 1.0);
  // p = 2: 1 + (-1)(-1/2) x
  CHECK(hyp2f1_photon(2, 0.5) == doctest::Approx(1.25));
  CHECK(hyp2f1_photon_poly(7, 0.2).degree == 3);
  CHECK_THROWS_AS(hyp2f1_photon(3, 1.5), nonclass::DomainError);
  CHECK_THROWS_AS(hyp2f1_photon(3, -0.1), nonclass::DomainError);
}

TEST_CASE("hyp2f1_photon reproduces squeezed-vacuum correlations") {
  // <a^p a+^p> summed directly on the squeezed-vacuum photon distribution
  // equals p! cosh^{2p} r 2F1(-p/2, -(p-1)/2; 1; tanh^2 r).
  const double r = 0.7;
  const double t = std::tanh(r);
  for (int p : {1, 2, 3, 4, 6}) {
    double brute = 0.0;
    for (int m = 0; m < 400; ++m) {
      const double log_pm = -std::log(std::cosh(r)) + m * std::log(t * t / 4.0) +
                            std::lgamma(2.0 * m + 1) - 2.0 * std::lgamma(m + 1.0);
      const double w = std::exp(std::lgamma(2.0 * m + p + 1) - std::lgamma(2.0 * m + 1));
      brute += std::exp(log_pm) * w;
    }
    const double closed =
        std::tgamma(p + 1.0) * std::pow(std::cosh(r), 2 * p) * hyp2f1_photon(p, t * t);
    CHECK(closed == doctest::Approx(brute).epsilon(1e-12));
  }
}

TEST_CASE("hyp2f1_photon approaches the Gauss sum at x = 1") {
  for (int p = 0; p <= 20; ++p) {
    CHECK(hyp2f1_photon(p, 1.0) == doctest::Approx(gauss_sum(p)).epsilon(1e-12));
    CHECK(hyp2f1_photon(p, 1.0 - 1e-12) == doctest::Approx(gauss_sum(p)).epsilon(1e-9));
  }
}

TEST_CASE("gamma duplication identity underlies the Gauss sum") {
  for (int p = 1; p <= 40; ++p) {
    const double lhs = std::lgamma(p / 2.0 + 0.5) + std::lgamma(p / 2.0 + 1.0);
    const double rhs = 0.5 * std::log(M_PI) - p * std::log(2.0) + std::lgamma(p + 1.0);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
  }
}

TEST_CASE("log_factorial") {
  CHECK(log_factorial(0) == 0.0);
  CHECK(log_factorial(1) == 0.0);
  CHECK(log_factorial(5) == doctest::Approx(std::log(120.0)).epsilon(1e-15));
  CHECK(log_factorial(1000) == doctest::Approx(std::lgamma(1001.0)).epsilon(1e-14));
  for (long long n : {255LL, 256LL, 257LL, 258LL, 5000LL, 1000000LL})
    CHECK(log_factorial(n) == doctest::Approx(std::lgamma(double(n) + 1.0)).epsilon(1e-14));
  CHECK(log_factorial(257) - log_factorial(256) ==
        doctest::Approx(std::log(257.0)).epsilon(1e-12));
  CHECK_THROWS_AS(log_factorial(-1), nonclass::DomainError);
}
