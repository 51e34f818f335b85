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

#include "nonclass/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nonclass/errors.hpp"
#include "nonclass/specfun.hpp"

namespace nonclass::analytic {
namespace {

constexpr double kPi = std::numbers::pi;

double log_cosh(double r) {
  const double a = std::abs(r);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

void require_r(double r) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("squeeze parameter must be finite and >= 0");
}

}  // namespace

double qmax_pac(const PacParams& params) {
  if (params.p < 0) throw DomainError("qmax_pac: negative photon number");
  if (!(params.alpha_sq >= 0.0)) throw DomainError("qmax_pac: negative |alpha|^2");
  if (params.p == 0) return 1.0 / kPi;

  // The maximizer modulus solves x^2 - |alpha| x - p = 0. Writing
  // (|alpha|/2)(sqrt(1 + 4p/|alpha|^2) - 1) as 2p / (sqrt(|alpha|^2 + 4p) + |alpha|)
  // keeps the expression finite and cancellation-free down to alpha = 0.
  const int p = params.p;
  const double a = std::sqrt(params.alpha_sq);
  const double root = std::sqrt(params.alpha_sq + 4.0 * p);
  const double x_max = 0.5 * (a + root);
  const double offset = 2.0 * p / (root + a);
  const double log_q = -specfun::log_factorial(p) -
                       std::log(specfun::laguerre(p, -params.alpha_sq)) +
                       2.0 * p * std::log(x_max) - offset * offset;
  return std::exp(log_q) / kPi;
}

double dq_pac(const PacParams& params) { return clamp_unit(1.0 - kPi * qmax_pac(params)); }

FockNonclassicality fock_nonclassicality(int p) {
  if (p < 1) throw DomainError("fock_nonclassicality: photon number must be >= 1");
  const double log_q = p * (std::log(double(p)) - 1.0) - specfun::log_factorial(p);
  const double qmax = std::exp(log_q) / kPi;
  return {qmax, clamp_unit(1.0 - kPi * qmax), 1.0 - 1.0 / std::sqrt(2.0 * kPi * p)};
}

double svs_qmax(double r) {
  require_r(r);
  return std::exp(-log_cosh(r)) / kPi;
}

double svs_dq(double r) { return clamp_unit(1.0 - kPi * svs_qmax(r)); }

double svs_antinormal(int p, double r) {
  require_r(r);
  if (p < 0) throw DomainError("svs_antinormal: negative order");
  const double t = std::tanh(r);
  return std::exp(specfun::log_factorial(p) + 2.0 * p * log_cosh(r)) *
         specfun::hyp2f1_photon(p, t * t);
}

PasvMaximum pasv_qmax(const PasvParams& params) {
  require_r(params.r);
  if (params.p < 0) throw DomainError("pasv_qmax: negative photon number");
  const double lc = log_cosh(params.r);
  if (params.p == 0) return {std::exp(-lc) / kPi, 0.0};
  const int p = params.p;
  const double t = std::tanh(params.r);
  const double log_ratio = -specfun::log_factorial(p) +
                           p * (std::log(double(p)) + params.r - 1.0 - lc) -
                           std::log(specfun::hyp2f1_photon(p, t * t));
  return {std::exp(log_ratio - lc) / kPi, p * std::exp(params.r + lc)};
}

double pasv_dq(const PasvParams& params) { return clamp_unit(1.0 - kPi * pasv_qmax(params).qmax); }

StrongSqueezingLimits strong_squeezing_limits(int p) {
  if (p < 1) throw DomainError("strong_squeezing_limits: photon number must be >= 1");
  const double dp = p;
  const double log_ratio =
      dp * (std::log(dp) - 1.0) + 0.5 * std::log(kPi) - std::lgamma(dp + 0.5);
  const double successive =
      std::exp(dp * std::log1p(1.0 / dp) - 1.0) * (dp + 1.0) / (dp + 0.5);
  return {std::exp(log_ratio), successive};
}

}  // namespace nonclass::analytic
