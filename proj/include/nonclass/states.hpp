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

// Pure single-mode states in a truncated photon-number basis.
//
// A state is an immutable amplitude vector c_0..c_N plus a certified bound on
// the probability mass discarded above the cutoff N. Automatic cutoffs are
// chosen so that this bound is at most kAutoTailTarget, far below the
// kTailTarget that an explicit cutoff override must meet: overlaps evaluated
// where |<beta|Psi>| is small are only as accurate as the square root of the
// discarded mass allows. When a state is going to receive
// added photons, pass `reserve_photons` so that the bound also covers the
// photon-number-weighted tails that photon addition amplifies.

#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nonclass/errors.hpp"
#include "nonclass/specfun.hpp"

namespace nonclass {

inline constexpr double kTailTarget = 1e-12;
inline constexpr double kAutoTailTarget = 1e-30;
inline constexpr double kNormSlack = 1e-12;
inline constexpr double kDisplaceNormTolerance = 1e-8;
inline constexpr int kMaxAutoCutoff = 200000;

// A phase-space coordinate beta = re + i im.
template <typename Real>
struct BasicPhasePoint {
  Real re{};
  Real im{};

  std::complex<Real> value() const { return {re, im}; }
  static BasicPhasePoint from(std::complex<Real> z) { return {z.real(), z.imag()}; }

  friend bool operator==(const BasicPhasePoint&, const BasicPhasePoint&) = default;
};

// Bookkeeping of a photon addition: p photons, and 1/|N_p|^2.
template <typename Real>
struct BasicAdditionRecord {
  int p = 0;
  Real norm_sq_inv = Real(1);
};

template <typename Real>
class BasicFockState {
 public:
  using Scalar = std::complex<Real>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  BasicFockState(Vector amplitudes, Real tail_bound)
      : amplitudes_(std::move(amplitudes)), tail_bound_(tail_bound) {
    if (amplitudes_.size() == 0)
      throw DomainError("FockState: at least one amplitude is required");
    if (!std::isfinite(tail_bound_) || tail_bound_ < Real(0))
      throw DomainError("FockState: tail bound must be finite and non-negative");
    if (!amplitudes_.allFinite())
      throw DomainError("FockState: non-finite amplitude");
    const Real norm = norm_sq();
    if (norm > Real(1) + Real(kNormSlack) ||
        norm < Real(1) - tail_bound_ - Real(kNormSlack))
      throw DomainError("FockState: squared norm " + std::to_string(double(norm)) +
                        " inconsistent with tail bound");
  }

  const Vector& amplitudes() const noexcept { return amplitudes_; }
  int cutoff() const noexcept { return static_cast<int>(amplitudes_.size()) - 1; }
  Real tail_bound() const noexcept { return tail_bound_; }
  Real norm_sq() const { return amplitudes_.squaredNorm(); }
  Scalar operator[](int n) const {
    return n >= 0 && n <= cutoff() ? amplitudes_(n) : Scalar(0);
  }

 private:
  Vector amplitudes_;
  Real tail_bound_;
};

using PhasePoint = BasicPhasePoint<double>;
using AdditionRecord = BasicAdditionRecord<double>;
using FockState = BasicFockState<double>;

namespace detail {

template <typename Real>
Real log_sum_exp(Real a, Real b) {
  if (a == -std::numeric_limits<Real>::infinity()) return b;
  if (b == -std::numeric_limits<Real>::infinity()) return a;
  const Real hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// Walks a non-negative sequence a_k (given in log form) for each weight
// j = 0..reserve and stops at the first K >= k_min where the relative tail
// sum_{k>K} a_k / sum_{k<=K} a_k is certified below kAutoTailTarget for every j.
// `ratio_sup(k, j)` must bound a_{k'+1}/a_{k'} from above for all k' >= k.
// With `fixed_k` the walk stops there and the achieved bound is returned.
template <typename Real, typename LogTerm, typename RatioSup>
std::pair<int, Real> certify_tail(int reserve, int k_min, std::optional<int> fixed_k,
                                  LogTerm log_term, RatioSup ratio_sup) {
  const Real neg_inf = -std::numeric_limits<Real>::infinity();
  std::vector<Real> log_mass(static_cast<std::size_t>(reserve) + 1, neg_inf);
  const int k_limit = fixed_k ? *fixed_k : kMaxAutoCutoff;
  for (int k = 0; k <= k_limit; ++k) {
    Real bound = Real(0);
    for (int j = 0; j <= reserve; ++j) {
      auto& mass = log_mass[static_cast<std::size_t>(j)];
      mass = log_sum_exp(mass, log_term(k, j));
      const Real rho = ratio_sup(k + 1, j);
      const Real next = log_term(k + 1, j);
      Real tail = std::numeric_limits<Real>::infinity();
      if (rho < Real(1)) tail = std::exp(next - mass) / (Real(1) - rho);
      bound = std::max(bound, tail);
    }
    if (fixed_k) {
      if (k == *fixed_k) return {k, bound};
    } else if (k >= k_min && bound <= Real(kAutoTailTarget)) {
      return {k, bound};
    }
  }
  throw CutoffError("automatic cutoff exceeded the supported maximum");
}

// w_n = (n+1)(n+2)...(n+p) for n = 0..cutoff, in log form when the direct
// product overflows. Returns (weights, log_weights_used).
template <typename Real>
std::pair<std::vector<Real>, bool> addition_weights(int cutoff, int p) {
  std::vector<Real> w(static_cast<std::size_t>(cutoff) + 1, Real(1));
  bool finite = true;
  for (int n = 0; n <= cutoff && finite; ++n) {
    Real prod = Real(1);
    for (int j = 1; j <= p; ++j) prod *= Real(n + j);
    w[static_cast<std::size_t>(n)] = prod;
    finite = std::isfinite(prod);
  }
  if (finite) return {std::move(w), false};
  for (int n = 0; n <= cutoff; ++n)
    w[static_cast<std::size_t>(n)] =
        specfun::log_factorial<Real>(n + p) - specfun::log_factorial<Real>(n);
  return {std::move(w), true};
}

}  // namespace detail

template <typename Real = double>
BasicFockState<Real> make_vacuum(int cutoff = 0) {
  typename BasicFockState<Real>::Vector c =
      BasicFockState<Real>::Vector::Zero(std::max(cutoff, 0) + 1);
  c(0) = Real(1);
  return {std::move(c), Real(0)};
}

// Truncated coherent state |alpha>. Auto cutoff starts from
// ceil(|alpha|^2 + 12 sqrt(|alpha|^2 + 1) + 20) and grows if the weighted
// Poisson tails for `reserve_photons` demand it.
template <typename Real>
BasicFockState<Real> make_coherent(std::complex<Real> alpha,
                                   std::optional<int> cutoff_override = std::nullopt,
                                   int reserve_photons = 0) {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
    throw DomainError("make_coherent: non-finite amplitude");
  if (cutoff_override && *cutoff_override < 0)
    throw CutoffError("make_coherent: negative cutoff");
  if (reserve_photons < 0) throw DomainError("make_coherent: negative reserve");
  const Real mu = std::norm(alpha);
  if (mu == Real(0)) return make_vacuum<Real>(cutoff_override.value_or(0));

  const Real log_mu = std::log(mu);
  auto log_term = [&](int n, int j) {
    return -mu + Real(n) * log_mu + specfun::log_factorial<Real>(n + j) -
           Real(2) * specfun::log_factorial<Real>(n);
  };
  auto ratio_sup = [&](int n, int j) {
    return mu * Real(n + 1 + j) / (Real(n + 1) * Real(n + 1));
  };
  const int n_min = static_cast<int>(std::ceil(mu + Real(12) * std::sqrt(mu + Real(1)) + Real(20)));
  const auto [cutoff, tail] =
      detail::certify_tail<Real>(reserve_photons, n_min, cutoff_override, log_term, ratio_sup);
  if (cutoff_override && tail > Real(kTailTarget))
    throw CutoffError("make_coherent: cutoff " + std::to_string(cutoff) +
                      " leaves truncated mass above " + std::to_string(kTailTarget));

  typename BasicFockState<Real>::Vector c(cutoff + 1);
  const Real log_abs = std::log(std::abs(alpha));
  const Real phase = std::arg(alpha);
  for (int n = 0; n <= cutoff; ++n) {
    const Real mag = std::exp(-mu / Real(2) + Real(n) * log_abs -
                              specfun::log_factorial<Real>(n) / Real(2));
    c(n) = std::polar(mag, Real(n) * phase);
  }
  return {std::move(c), tail};
}

// Squeezed vacuum with c_{2m} = (cosh r)^{-1/2} (e^{i phi} tanh r / 2)^m
// sqrt((2m)!) / m! and vanishing odd amplitudes. Its Q function is
// exp(-|b|^2 [1 - tanh r cos(phi - 2 arg b)]) / (pi cosh r).
template <typename Real>
BasicFockState<Real> make_squeezed_vacuum(Real r, Real phi,
                                          std::optional<int> cutoff_override = std::nullopt,
                                          int reserve_photons = 0) {
  if (!(r >= Real(0)) || !std::isfinite(r))
    throw DomainError("make_squeezed_vacuum: squeeze parameter must be finite and >= 0");
  if (!std::isfinite(phi)) throw DomainError("make_squeezed_vacuum: non-finite angle");
  if (cutoff_override && *cutoff_override < 0)
    throw CutoffError("make_squeezed_vacuum: negative cutoff");
  if (reserve_photons < 0) throw DomainError("make_squeezed_vacuum: negative reserve");
  if (r == Real(0)) return make_vacuum<Real>(cutoff_override.value_or(0));

  const Real t = std::tanh(r);
  const Real t2 = t * t;
  if (!(t2 < Real(1)))
    throw CutoffError("make_squeezed_vacuum: squeezing too strong for a truncated basis");
  const Real log_cosh = std::log(std::cosh(r));
  const Real log_q = std::log(t2 / Real(4));
  // Index k runs over m, the photon number being 2m.
  auto log_term = [&](int m, int j) {
    return -log_cosh + Real(m) * log_q + specfun::log_factorial<Real>(2 * m + j) -
           Real(2) * specfun::log_factorial<Real>(m);
  };
  auto ratio_sup = [&](int m, int j) {
    const Real den = Real(2 * m + 2) * Real(2 * m + 2);
    const Real rho = t2 * Real(2 * m + j + 1) * Real(2 * m + j + 2) / den;
    return j == 0 ? std::max(rho, t2) : rho;
  };
  std::optional<int> fixed_m;
  if (cutoff_override) fixed_m = *cutoff_override / 2;
  const auto [m_cut, tail] =
      detail::certify_tail<Real>(reserve_photons, 0, fixed_m, log_term, ratio_sup);
  if (cutoff_override && tail > Real(kTailTarget))
    throw CutoffError("make_squeezed_vacuum: cutoff " + std::to_string(*cutoff_override) +
                      " leaves truncated mass above " + std::to_string(kTailTarget));

  const int cutoff = cutoff_override.value_or(2 * m_cut);
  typename BasicFockState<Real>::Vector c =
      BasicFockState<Real>::Vector::Zero(cutoff + 1);
  const std::complex<Real> z = std::polar(t / Real(2), phi);
  std::complex<Real> amp(std::exp(-log_cosh / Real(2)), Real(0));
  for (int m = 0; m <= m_cut; ++m) {
    c(2 * m) = amp;
    amp *= z * std::sqrt(Real(2 * m + 1) * Real(2 * m + 2)) / Real(m + 1);
  }
  return {std::move(c), tail};
}

template <typename Real = double>
BasicFockState<Real> make_fock(int p) {
  if (p < 0) throw DomainError("make_fock: negative photon number");
  typename BasicFockState<Real>::Vector c = BasicFockState<Real>::Vector::Zero(p + 1);
  c(p) = Real(1);
  return {std::move(c), Real(0)};
}

// <Psi| a^p (a^dagger)^p |Psi> = sum_n |c_n|^2 (n+1)...(n+p).
template <typename Real>
Real antinormal_correlation(const BasicFockState<Real>& state, int p) {
  if (p < 0) throw DomainError("antinormal_correlation: negative order");
  const auto& c = state.amplitudes();
  const auto [w, in_log] = detail::addition_weights<Real>(state.cutoff(), p);
  Real sum = Real(0);
  for (int n = 0; n <= state.cutoff(); ++n) {
    const Real wn = w[static_cast<std::size_t>(n)];
    sum += std::norm(c(n)) * (in_log ? std::exp(wn) : wn);
  }
  return sum;
}

template <typename Real>
Real mean_photon(const BasicFockState<Real>& state) {
  const auto& c = state.amplitudes();
  Real sum = Real(0);
  for (int n = 1; n <= state.cutoff(); ++n) sum += Real(n) * std::norm(c(n));
  return sum;
}

// Applies (a^dagger)^p and renormalizes. The output inherits the input's
// tail bound, which is meaningful when the input was built with
// reserve_photons >= p.
template <typename Real>
std::pair<BasicFockState<Real>, BasicAdditionRecord<Real>> add_photons(
    const BasicFockState<Real>& input, int p) {
  if (p < 0) throw DomainError("add_photons: negative photon number");
  if (p == 0) return {input, {0, Real(1)}};

  const int cutoff = input.cutoff();
  const auto& c = input.amplitudes();
  const auto [w, in_log] = detail::addition_weights<Real>(cutoff, p);

  // Normalization in log space when the weights overflow.
  Real shift = Real(0);
  if (in_log) shift = *std::max_element(w.begin(), w.end());
  Real scaled_sum = Real(0);
  for (int n = 0; n <= cutoff; ++n) {
    const Real wn = w[static_cast<std::size_t>(n)];
    scaled_sum += std::norm(c(n)) * (in_log ? std::exp(wn - shift) : wn);
  }
  if (!(scaled_sum > Real(0)))
    throw DomainError("add_photons: input state has zero norm");

  typename BasicFockState<Real>::Vector out =
      BasicFockState<Real>::Vector::Zero(cutoff + p + 1);
  for (int n = 0; n <= cutoff; ++n) {
    const Real wn = w[static_cast<std::size_t>(n)];
    const Real scale = in_log ? std::exp((wn - shift) / Real(2)) / std::sqrt(scaled_sum)
                              : std::sqrt(wn / scaled_sum);
    out(n + p) = c(n) * scale;
  }
  const Real norm_sq_inv = in_log ? scaled_sum * std::exp(shift) : scaled_sum;
  // Renormalizing also absorbs the input's own truncation deficit.
  return {BasicFockState<Real>(std::move(out), input.tail_bound()), {p, norm_sq_inv}};
}

// R(theta) = exp(-i theta a^dagger a).
template <typename Real>
BasicFockState<Real> rotate(const BasicFockState<Real>& input, Real theta) {
  typename BasicFockState<Real>::Vector out = input.amplitudes();
  for (int n = 1; n <= input.cutoff(); ++n)
    out(n) *= std::polar(Real(1), -theta * Real(n));
  return {std::move(out), input.tail_bound()};
}

namespace detail {

// Fills g_i proportional to <i+k| D |i> (k >= 0, parameter mu = lambda) or
// <i| D |i+k> (parameter mu = -conj(lambda)) for i = 0..len-1. Uses the
// associated-Laguerre recurrence with the sqrt(i!/(i+k)!) prefactor folded
// in; values are stored as g_i * factor_i where factor carries the
// log-factorial prefactor and any rescaling.
template <typename Real, typename Sink>
void displacement_diagonal(std::complex<Real> mu, Real x, int k, int len, Sink sink) {
  if (len <= 0) return;
  const Real log_d0 = -x / Real(2) + (k > 0 ? Real(k) * std::log(std::abs(mu)) : Real(0)) -
                      specfun::log_factorial<Real>(k) / Real(2);
  const std::complex<Real> phase = std::polar(Real(1), Real(k) * std::arg(mu));
  constexpr Real kRescale = Real(1e150);
  const Real log_rescale = std::log(kRescale);
  Real log_scale = log_d0;
  std::complex<Real> factor = phase * std::exp(log_scale);

  Real prev = Real(0);
  Real cur = Real(1);
  sink(0, factor * cur);
  for (int i = 0; i + 1 < len; ++i) {
    const Real next = ((Real(2 * i + k + 1) - x) * cur -
                       std::sqrt(Real(i) * Real(i + k)) * prev) /
                      std::sqrt(Real(i + 1) * Real(i + k + 1));
    prev = cur;
    cur = next;
    if (std::abs(cur) > kRescale) {
      cur /= kRescale;
      prev /= kRescale;
      log_scale += log_rescale;
      factor = phase * std::exp(log_scale);
    }
    sink(i + 1, factor * cur);
  }
}

}  // namespace detail

// D(lambda)|Psi> in an enlarged basis of cutoff
// N + ceil(|lambda|^2 + 12 |lambda| + 10).
template <typename Real>
BasicFockState<Real> displace(const BasicFockState<Real>& input, std::complex<Real> lambda) {
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()))
    throw DomainError("displace: non-finite displacement");
  if (lambda == std::complex<Real>(0)) return input;
  const Real x = std::norm(lambda);
  const int n_in = input.cutoff();
  const int n_out =
      n_in + static_cast<int>(std::ceil(x + Real(12) * std::sqrt(x) + Real(10)));
  const auto& c = input.amplitudes();
  typename BasicFockState<Real>::Vector out = BasicFockState<Real>::Vector::Zero(n_out + 1);

  for (int k = 0; k <= n_out; ++k) {
    const int len = std::min(n_in, n_out - k) + 1;
    detail::displacement_diagonal<Real>(lambda, x, k, len, [&](int i, std::complex<Real> d) {
      out(i + k) += d * c(i);
    });
  }
  const std::complex<Real> mu_up = -std::conj(lambda);
  for (int k = 1; k <= n_in; ++k) {
    detail::displacement_diagonal<Real>(mu_up, x, k, n_in - k + 1,
                                        [&](int i, std::complex<Real> d) {
                                          out(i) += d * c(i + k);
                                        });
  }

  const Real norm_in = input.norm_sq();
  const Real norm_out = out.squaredNorm();
  if (!(std::abs(norm_out - norm_in) <= Real(kDisplaceNormTolerance)))
    throw AccuracyError("displace: truncated displacement changed the norm by " +
                        std::to_string(double(norm_out - norm_in)));
  const Real tail = std::max(input.tail_bound(), Real(1) - norm_out);
  return {std::move(out), std::max(tail, Real(0))};
}

// <beta|Psi> = exp(-|beta|^2/2) sum_n c_n conj(beta)^n / sqrt(n!).
template <typename Real>
std::complex<Real> coherent_overlap(const BasicFockState<Real>& state, std::complex<Real> beta) {
  const auto& c = state.amplitudes();
  const std::complex<Real> bc = std::conj(beta);
  constexpr Real kRescale = Real(1e150);
  Real log_scale = -std::norm(beta) / Real(2);
  Real factor = std::exp(log_scale);
  std::complex<Real> term(1);
  std::complex<Real> sum = c(0) * factor;
  for (int n = 1; n <= state.cutoff(); ++n) {
    term *= bc / std::sqrt(Real(n));
    if (std::abs(term) > kRescale) {
      term /= kRescale;
      log_scale += std::log(kRescale);
      factor = std::exp(log_scale);
    }
    sum += c(n) * (term * factor);
  }
  return sum;
}

// <a|b> over the common support.
template <typename Real>
std::complex<Real> inner_product(const BasicFockState<Real>& a, const BasicFockState<Real>& b) {
  const int n = std::min(a.cutoff(), b.cutoff());
  std::complex<Real> sum(0);
  for (int i = 0; i <= n; ++i) sum += std::conj(a.amplitudes()(i)) * b.amplitudes()(i);
  return sum;
}

}  // namespace nonclass
