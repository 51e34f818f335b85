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
#include <complex>
#include <random>
#include <vector>

#include <doctest.h>

#include "nonclass/specfun.hpp"
#include "nonclass/states.hpp"

using namespace nonclass;
using cd = std::complex<double>;

namespace {

double max_abs_diff(const FockState& a, const FockState& b) {
  double worst = 0.0;
  const int n = std::max(a.cutoff(), b.cutoff());
  for (int k = 0; k <= n; ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

// Displacement matrix D_{m,n} = <m|D(l)|n> built column by column from
// a+ D = D (a+ - l*), i.e. sqrt(n) D_{m,n} = sqrt(m) D_{m-1,n-1} - l* D_{m,n-1}.
std::vector<std::vector<cd>> displacement_oracle(cd l, int rows, int cols) {
  std::vector<std::vector<cd>> d(rows + cols + 1, std::vector<cd>(cols + 1));
  const int m_max = rows + cols;
  cd coef = std::exp(-std::norm(l) / 2.0);
  for (int m = 0; m <= m_max; ++m) {
    d[m][0] = coef;
    coef *= l / std::sqrt(double(m + 1));
  }
  for (int n = 1; n <= cols; ++n)
    for (int m = 0; m <= m_max - n; ++m) {
      cd v = -std::conj(l) * d[m][n - 1];
      if (m > 0) v += std::sqrt(double(m)) * d[m - 1][n - 1];
      d[m][n] = v / std::sqrt(double(n));
    }
  d.resize(rows + 1);
  return d;
}

}  // namespace

TEST_CASE("coherent state amplitudes") {
  const FockState vac = make_coherent(cd(0.0, 0.0));
  CHECK(vac[0] == cd(1.0));
  CHECK(vac.tail_bound() == 0.0);

  const FockState s = make_coherent(cd(2.0, 2.0));
  CHECK(s.norm_sq() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s.tail_bound() <= kAutoTailTarget);
  CHECK(mean_photon(s) == doctest::Approx(8.0).epsilon(1e-12));
  // c_3 = e^{-|a|^2/2} a^3 / sqrt(3!)
  const cd a(2.0, 2.0);
  CHECK(std::abs(s[3] - std::exp(-4.0) * a * a * a / std::sqrt(6.0)) < 1e-15);

  CHECK(mean_photon(make_coherent(cd(3.0, 0.0))) == doctest::Approx(9.0).epsilon(1e-12));
  CHECK_THROWS_AS(make_coherent(cd(3.0, 0.0), 5), CutoffError);
  CHECK_THROWS_AS(make_coherent(cd(NAN, 0.0)), DomainError);
}

TEST_CASE("squeezed vacuum") {
  const FockState vac = make_squeezed_vacuum(0.0, 1.0);
  CHECK(vac.cutoff() == 0);
  CHECK(vac[0] == cd(1.0));

  const FockState s = make_squeezed_vacuum(1.0, 0.3);
  CHECK(s.norm_sq() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(mean_photon(s) == doctest::Approx(std::pow(std::sinh(1.0), 2)).epsilon(1e-12));
  for (int n = 1; n <= s.cutoff(); n += 2) REQUIRE(s[n] == cd(0.0));
  // Q(0) = |c_0|^2 / pi = 1 / (pi cosh r)
  CHECK(std::norm(s[0]) == doctest::Approx(1.0 / std::cosh(1.0)).epsilon(1e-14));
  // c_2 = c_0 e^{i phi} tanh r / sqrt(2)
  CHECK(std::abs(s[2] - s[0] * std::polar(std::tanh(1.0) / std::sqrt(2.0), 0.3)) < 1e-15);
  CHECK_THROWS_AS(make_squeezed_vacuum(-0.1, 0.0), DomainError);
}

TEST_CASE("fock and vacuum") {
  const FockState f = make_fock(3);
  CHECK(f.cutoff() == 3);
  CHECK(f[3] == cd(1.0));
  CHECK(mean_photon(f) == doctest::Approx(3.0));
  CHECK_THROWS_AS(make_fock(-1), DomainError);
  CHECK(make_vacuum(4).cutoff() == 4);
}

TEST_CASE("state constructor validates the norm") {
  FockState::Vector v(2);
  v << cd(0.9), cd(0.0);
  CHECK_THROWS_AS(FockState(v, 0.0), DomainError);
  CHECK_NOTHROW(FockState(v, 0.2));
  v << cd(1.0), cd(0.1);
  CHECK_THROWS_AS(FockState(v, 0.0), DomainError);
}

TEST_CASE("add_photons") {
  const FockState c = make_coherent(cd(1.2, -0.4));
  auto [same, rec0] = add_photons(c, 0);
  CHECK(rec0.p == 0);
  CHECK(max_abs_diff(same, c) == 0.0);

  auto [three, rec] = add_photons(make_vacuum(), 3);
  CHECK(std::abs(three[3]) == doctest::Approx(1.0));
  CHECK(rec.norm_sq_inv == doctest::Approx(6.0));

  // For a coherent state S_p = p! L_p(-|a|^2); oracle by direct series.
  for (int p : {1, 2, 5}) {
    const double mu = std::norm(cd(1.2, -0.4));
    double series = 0.0;
    for (int k = 0; k <= p; ++k)
      series += std::exp(std::lgamma(p + 1.0) - std::lgamma(k + 1.0) - std::lgamma(p - k + 1.0)) *
                std::pow(mu, k) / std::tgamma(k + 1.0);
    series *= std::tgamma(p + 1.0);
    const FockState src = make_coherent(cd(1.2, -0.4), std::nullopt, p);
    auto [added, r] = add_photons(src, p);
    CHECK(r.norm_sq_inv == doctest::Approx(series).epsilon(1e-12));
    CHECK(antinormal_correlation(src, p) == doctest::Approx(series).epsilon(1e-12));
    CHECK(added.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
    for (int n = 0; n < p; ++n) REQUIRE(added[n] == cd(0.0));
  }
  CHECK_THROWS_AS(add_photons(c, -1), DomainError);
}

TEST_CASE("photon addition scales Q by |beta|^2p / S") {
  const FockState src = make_squeezed_vacuum(0.5, 0.9, std::nullopt, 2);
  auto [added, rec] = add_photons(src, 2);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  for (int i = 0; i < 100; ++i) {
    const cd b(u(rng), u(rng));
    const double q0 = std::norm(coherent_overlap(src, b));
    const double q2 = std::norm(coherent_overlap(added, b));
    CHECK(q2 == doctest::Approx(std::pow(std::norm(b), 2) * q0 / rec.norm_sq_inv)
                    .epsilon(1e-10)
                    .scale(1e-300));
  }
}

TEST_CASE("antinormal correlation") {
  const cd a(0.8, 0.6);
  CHECK(antinormal_correlation(make_coherent(a), 1) == doctest::Approx(2.0).epsilon(1e-13));
  const FockState s = make_squeezed_vacuum(0.6, 0.0, std::nullopt, 6);
  double prev = 1.0;
  for (int p = 1; p <= 6; ++p) {
    const double sp = antinormal_correlation(s, p);
    CHECK(sp >= p * prev);  // S_p >= p S_{p-1}
    prev = sp;
  }
}

TEST_CASE("displace") {
  const FockState s = make_squeezed_vacuum(0.4, 0.2);
  CHECK(max_abs_diff(displace(s, cd(0.0)), s) < 1e-15);

  // The displaced state keeps a shorter cutoff than a freshly built one;
  // compare where both are stored and bound what was dropped.
  const cd alpha(1.1, -0.7);
  const FockState dv = displace(make_vacuum(), alpha);
  const FockState cv = make_coherent(alpha);
  double dropped = 0.0;
  for (int m = 0; m <= cv.cutoff(); ++m) {
    if (m <= dv.cutoff()) REQUIRE(std::abs(dv[m] - cv[m]) < 1e-15);
    else dropped += std::norm(cv[m]);
  }
  CHECK(dropped < kTailTarget);

  const FockState d = displace(s, cd(2.0, 1.5));
  CHECK(d.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));

  // Matrix elements against the independent ladder-operator recurrence.
  const FockState f = make_fock(4);
  const cd l(0.9, 0.4);
  const auto oracle = displacement_oracle(l, 40, 4);
  const FockState df = displace(f, l);
  REQUIRE(df.cutoff() < 40);
  double dropped_f = 0.0;
  for (int m = 0; m <= 40; ++m) {
    if (m <= df.cutoff()) REQUIRE(std::abs(df[m] - oracle[m][4]) < 1e-14);
    else dropped_f += std::norm(oracle[m][4]);
  }
  CHECK(dropped_f < kTailTarget);
  CHECK(1.0 - df.norm_sq() == doctest::Approx(dropped_f).scale(1.0).epsilon(1e-14));

  // Composition up to a phase: D(a) D(b) = e^{i Im(a b*)} D(a + b).
  const cd a(0.5, 0.3), b(-0.2, 0.9);
  const FockState two = displace(displace(s, b), a);
  const FockState one = displace(s, a + b);
  const cd phase = std::exp(cd(0.0, std::imag(a * std::conj(b))));
  double worst = 0.0;
  for (int k = 0; k <= std::max(one.cutoff(), two.cutoff()); ++k)
    worst = std::max(worst, std::abs(two[k] - phase * one[k]));
  CHECK(worst < 1e-12);
}

TEST_CASE("rotate") {
  const cd a(1.3, 0.2);
  const FockState c = make_coherent(a);
  CHECK(max_abs_diff(rotate(c, 0.0), c) == 0.0);
  CHECK(max_abs_diff(rotate(c, 2.0 * M_PI), c) < 1e-12);
  const double theta = 0.75;
  CHECK(max_abs_diff(rotate(c, theta), make_coherent(a * std::polar(1.0, -theta))) < 1e-13);
  const FockState r = rotate(c, theta);
  for (int n = 0; n <= c.cutoff(); ++n) REQUIRE(std::abs(r[n]) == doctest::Approx(std::abs(c[n])));
}

TEST_CASE("coherent overlap and inner product") {
  CHECK(std::abs(coherent_overlap(make_fock(1), cd(1.0))) ==
        doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
  // <a|b> = exp(-|a|^2/2 - |b|^2/2 + a* b)
  const cd a(0.4, 1.0), b(-0.3, 0.6);
  const cd expected = std::exp(-std::norm(a) / 2.0 - std::norm(b) / 2.0 + std::conj(a) * b);
  CHECK(std::abs(coherent_overlap(make_coherent(b), a) - expected) < 1e-14);
  CHECK(std::abs(inner_product(make_coherent(a), make_coherent(b)) - expected) < 1e-14);
  // Large |beta| does not overflow.
  CHECK(std::isfinite(std::abs(coherent_overlap(make_coherent(cd(20.0, 0.0)), cd(20.0, 0.0)))));
}
