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

#include "nonclass/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "nonclass/analytic.hpp"
#include "nonclass/optimizer.hpp"
#include "nonclass/quasiprob.hpp"

namespace nonclass {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

double rel_err(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

// Collects failures and the worst observed deviation of one check.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && first_failure_.empty()) first_failure_ = what;
    ok_ = ok_ && ok;
  }
  void track(double deviation) { worst_ = std::max(worst_, deviation); }
  bool ok() const { return ok_; }
  std::string detail(const std::string& summary) const {
    std::string out = summary;
    if (worst_ > 0.0) out += fmt(" (worst deviation %.3g)", worst_);
    if (!ok_) out += "; FAILED: " + first_failure_;
    return out;
  }

 private:
  bool ok_ = true;
  double worst_ = 0.0;
  std::string first_failure_;
};

using Clock = std::chrono::steady_clock;

template <typename Body>
CheckResult timed(std::string id, std::string title, Body body) {
  const auto start = Clock::now();
  CheckResult result{std::move(id), std::move(title), false, {}, 0.0};
  try {
    Tally tally;
    const std::string summary = body(tally);
    result.passed = tally.ok();
    result.detail = tally.detail(summary);
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

FockState pac_state(int p, std::complex<double> alpha) {
  return add_photons(make_coherent(alpha, std::nullopt, p), p).first;
}

FockState pasv_state(const VerifyHooks& hooks, int p, double r, double phi) {
  return add_photons(hooks.squeezed_vacuum(r, phi, p), p).first;
}

// Distance between two angles modulo pi: the photon-added squeezed vacuum Q
// is even in beta, so its two maxima at phi/2 and phi/2 + pi are equivalent.
double angle_gap_mod_pi(double a, double b) {
  const double d = std::remainder(a - b, kPi);
  return std::abs(d);
}

double golden_section_min(const std::function<double(double)>& f, double lo, double hi) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > 1e-12) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

int odd_resolution(double width, double step) {
  int n = static_cast<int>(std::ceil(width / step));
  return n % 2 == 0 ? n + 1 : n;
}

CheckResult check_fock_degrees() {
  return timed("1", "Fock-state degrees match closed form (p = 1..10)", [](Tally& t) {
    const auto start = Clock::now();
    for (int p = 1; p <= 10; ++p) {
      const auto report = dq_numeric(make_fock(p));
      const double expected = analytic::fock_nonclassicality(p).dq;
      t.track(std::abs(report.dq - expected));
      t.expect(std::abs(report.dq - expected) <= 1e-6, fmt("p=%g numeric dq off by %.3g", p, report.dq - expected));
      if (p == 1)
        t.expect(std::abs(report.dq - (1.0 - 1.0 / kE)) <= 1e-6, "p=1 differs from 1 - 1/e");
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    t.expect(elapsed < 5.0, fmt("runtime %.2f s exceeds 5 s", elapsed));
    return fmt("10 Fock states in %.2f s", elapsed);
  });
}

CheckResult check_pac() {
  return timed("2", "Photon-added coherent Q_max and monotonicity in |alpha|^2 and p", [](Tally& t) {
    const auto start = Clock::now();
    const int ps[] = {1, 2, 5, 10};
    const double alphas[] = {0.1, 0.9, 3.0};
    double dq[4][3];
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 3; ++j) {
        const auto report = dq_numeric(pac_state(ps[i], std::sqrt(alphas[j])));
        const double expected = analytic::qmax_pac({ps[i], alphas[j]});
        const double err = rel_err(report.q_max, expected);
        t.track(err);
        t.expect(err <= 1e-6, fmt("p=%g alpha_sq=%g relative error %.3g", ps[i], alphas[j], err));
        dq[i][j] = report.dq;
      }
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j + 1 < 3; ++j)
        t.expect(dq[i][j + 1] < dq[i][j], fmt("dq not decreasing in alpha_sq at p=%g", ps[i]));
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i + 1 < 4; ++i)
        t.expect(dq[i + 1][j] > dq[i][j], fmt("dq not increasing in p at alpha_sq=%g", alphas[j]));
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    t.expect(elapsed < 30.0, fmt("runtime %.2f s exceeds 30 s", elapsed));
    return fmt("12 states in %.2f s", elapsed);
  });
}

CheckResult check_svs_correlations(const VerifyHooks& hooks) {
  return timed("3", "Squeezed-vacuum antinormal correlations (brute force vs closed form)",
               [&](Tally& t) {
                 for (double r : {0.0, 0.5, 1.0, 2.0}) {
                   const FockState svs = hooks.squeezed_vacuum(r, 0.0, 6);
                   for (int p = 0; p <= 6; ++p) {
                     const double err = rel_err(antinormal_correlation(svs, p), analytic::svs_antinormal(p, r));
                     t.track(err);
                     t.expect(err <= 1e-9, fmt("r=%g p=%g relative error %.3g", r, p, err));
                   }
                   const double c2 = std::cosh(r) * std::cosh(r);
                   t.expect(rel_err(analytic::svs_antinormal(1, r), c2) <= 1e-12,
                            fmt("p=1 differs from cosh^2 r at r=%g", r));
                 }
                 return std::string("p <= 6, r in {0, 0.5, 1, 2}");
               });
}

CheckResult check_pasv(const VerifyHooks& hooks) {
  return timed("4", "Photon-added squeezed vacuum Q_max and maximizer location", [&](Tally& t) {
    const double phi = 0.6;
    for (int p : {1, 2, 5, 10})
      for (double r : {0.3, 0.55, 1.0, 2.0}) {
        const auto report = dq_numeric(pasv_state(hooks, p, r, phi));
        const auto expected = analytic::pasv_qmax({p, r, phi});
        const double err = rel_err(report.q_max, expected.qmax);
        t.track(err);
        t.expect(err <= 1e-6, fmt("p=%g r=%g q_max relative error %.3g", p, r, err));
        const auto b = report.beta_max.value();
        const double loc_err = rel_err(std::norm(b), expected.beta_max_modulus_sq);
        t.expect(loc_err <= 1e-3, fmt("p=%g r=%g |beta_max|^2 relative error %.3g", p, r, loc_err));
        const double arg_err = angle_gap_mod_pi(std::arg(b), phi / 2.0);
        t.expect(arg_err <= 1e-3, fmt("p=%g r=%g arg beta_max off by %.3g", p, r, arg_err));
      }
    return std::string("16 states, phi = 0.6");
  });
}

CheckResult check_enhancement_inequalities() {
  return timed("5", "Enhancement inequalities (single/double photon, Fock sequence, successive limit)",
               [](Tally& t) {
                 for (int i = 0; i <= 300; ++i) {
                   const double r = 0.01 * i;
                   const double s0 = analytic::svs_qmax(r);
                   const double q1 = analytic::pasv_qmax({1, r, 0.0}).qmax / s0;
                   const double q2 = analytic::pasv_qmax({2, r, 0.0}).qmax / s0;
                   const double e1 = (2.0 / kE) / (1.0 + std::exp(-2.0 * r));
                   const double e2 = (16.0 / 3.0) / (kE * kE) /
                                     (1.0 + 2.0 / 3.0 * std::exp(-2.0 * r) + std::exp(-4.0 * r));
                   t.track(std::max(rel_err(q1, e1), rel_err(q2, e2)));
                   t.expect(rel_err(q1, e1) <= 1e-12 && rel_err(q2, e2) <= 1e-12,
                            fmt("ratio formula mismatch at r=%g", r));
                   t.expect(q1 < 1.0 && q2 < 1.0, fmt("ratio not below 1 at r=%g", r));
                 }
                 for (int p = 1; p < 20; ++p) {
                   const double ratio = analytic::fock_nonclassicality(p + 1).qmax /
                                        analytic::fock_nonclassicality(p).qmax;
                   const double expected = std::pow(1.0 + 1.0 / p, p) / kE;
                   t.expect(ratio < 1.0, fmt("Fock Q_max not decreasing at p=%g", p));
                   t.expect(rel_err(ratio, expected) <= 1e-12, fmt("Fock ratio mismatch at p=%g", p));
                 }
                 for (int p = 1; p <= 100; ++p)
                   t.expect(analytic::strong_squeezing_limits(p).ratio_successive < 1.0,
                            fmt("successive limit ratio >= 1 at p=%g", p));
                 return std::string("r in [0, 3], Fock p = 1..20, limits p = 1..100");
               });
}

CheckResult check_strong_squeezing() {
  return timed("6", "Strong-squeezing limits (r = 30, p = 10^4 asymptote)", [](Tally& t) {
    for (int p = 1; p <= 10; ++p) {
      const double ratio = analytic::pasv_qmax({p, 30.0, 0.0}).qmax / analytic::svs_qmax(30.0);
      const double err = rel_err(ratio, analytic::strong_squeezing_limits(p).ratio_to_svs);
      t.track(err);
      t.expect(err <= 1e-8, fmt("p=%g r=30 relative error %.3g", p, err));
    }
    const double big = analytic::strong_squeezing_limits(10000).ratio_to_svs;
    t.expect(std::abs(big - 1.0 / std::sqrt(2.0)) <= 1e-4,
             fmt("p=1e4 ratio %.8g differs from 1/sqrt(2)", big));
    return fmt("p=1e4 ratio %.8g", big);
  });
}

CheckResult check_fig3_minimum() {
  return timed("7", "Single-photon-added squeezed vacuum: interior minimum of dq", [](Tally& t) {
    auto dq_of_r = [](double r) { return analytic::pasv_dq({1, r, 0.0}); };
    const double r_star = golden_section_min(dq_of_r, 0.05, 2.0);
    const double x_star = std::sinh(r_star) * std::sinh(r_star);
    const double dq_star = dq_of_r(r_star);
    t.expect(std::abs(x_star - 0.334) <= 0.03, fmt("minimum at mean occupancy %.4g", x_star));
    t.expect(std::abs(dq_star - 0.522) <= 0.005, fmt("minimum value %.4g", dq_star));
    t.expect(dq_of_r(0.05) > dq_star && dq_of_r(2.0) > dq_star, "minimum not interior");
    t.expect(std::abs(dq_of_r(0.0) - (1.0 - 1.0 / kE)) <= 1e-12, "dq(0) differs from 1 - 1/e");
    double prev = dq_star;
    for (double r = r_star + 0.05; r <= 30.0; r += 0.05) {
      const double v = dq_of_r(r);
      t.expect(v >= prev, fmt("dq not increasing beyond the minimum at r=%g", r));
      prev = v;
    }
    t.expect(dq_of_r(30.0) > 1.0 - 1e-9, "dq does not approach 1 for strong squeezing");
    return fmt("minimum dq %.6g at mean occupancy %.6g", dq_star, x_star);
  });
}

CheckResult check_displacement_invariance(const VerifyHooks& hooks) {
  return timed("8a", "D_Q invariant under 20 random displacements", [&](Tally& t) {
    std::mt19937_64 rng(20260101);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const FockState states[] = {make_fock(1), pac_state(1, 1.0), pasv_state(hooks, 1, 1.0, 0.0)};
    for (const auto& state : states) {
      const double base = dq_numeric(state).dq;
      for (int k = 0; k < 20; ++k) {
        const double rad = std::sqrt(unit(rng));
        const double ang = 2.0 * kPi * unit(rng);
        const auto lambda = std::polar(rad, ang);
        const double moved = dq_numeric(displace(state, lambda)).dq;
        t.track(std::abs(moved - base));
        t.expect(std::abs(moved - base) <= 1e-5, fmt("displacement changed dq by %.3g", moved - base));
      }
    }
    return std::string("fock(1), pac(1, alpha=1), pasv(1, r=1)");
  });
}

CheckResult check_rotation_invariance(const VerifyHooks& hooks) {
  return timed("8b", "D_Q invariant under rotations", [&](Tally& t) {
    std::mt19937_64 rng(20260102);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    const FockState states[] = {make_fock(1), pac_state(1, 1.0), pasv_state(hooks, 1, 1.0, 0.0)};
    for (const auto& state : states) {
      const double base = dq_numeric(state).dq;
      for (int k = 0; k < 5; ++k) {
        const double moved = dq_numeric(rotate(state, angle(rng))).dq;
        t.track(std::abs(moved - base));
        t.expect(std::abs(moved - base) <= 1e-9, fmt("rotation changed dq by %.3g", moved - base));
      }
    }
    return std::string("5 random angles per state");
  });
}

CheckResult check_wigner(const VerifyHooks& hooks) {
  return timed("9", "Wigner negativity detects non-Gaussian states only", [&](Tally& t) {
    auto scan = [](const FockState& s) {
      const double radius = 3.0 * std::sqrt(mean_photon(s)) + 3.0;
      return wigner_min_scan(s, Window::square(radius), 41);
    };
    for (int n = 1; n <= 3; ++n) {
      const auto m = scan(make_fock(n));
      t.expect(m.value < -1e-3, fmt("fock(%g) minimum %.3g not negative", n, m.value));
      if (n == 1) {
        t.track(std::abs(m.value + 2.0 / kPi));
        t.expect(std::abs(m.value + 2.0 / kPi) <= 1e-6, fmt("fock(1) minimum %.9g != -2/pi", m.value));
      }
    }
    for (int p = 1; p <= 2; ++p) {
      const auto m = scan(pac_state(p, 1.0));
      t.expect(m.value < -1e-3, fmt("pac(p=%g) minimum %.3g not negative", p, m.value));
    }
    const auto coh = scan(make_coherent<double>({1.0, 0.5}));
    t.expect(coh.value >= -1e-8, fmt("coherent minimum %.3g is negative", coh.value));
    const auto sq = scan(hooks.squeezed_vacuum(1.0, 0.3, 0));
    t.expect(sq.value >= -1e-8, fmt("squeezed vacuum minimum %.3g is negative", sq.value));
    return std::string("fock(1..3), pac(1..2), coherent, squeezed vacuum");
  });
}

std::vector<std::pair<std::string, FockState>> normalization_states(const VerifyHooks& hooks) {
  std::vector<std::pair<std::string, FockState>> out;
  out.emplace_back("coherent(1.5+1i)", make_coherent<double>({1.5, 1.0}));
  out.emplace_back("svs(r=0.8)", hooks.squeezed_vacuum(0.8, 0.4, 0));
  out.emplace_back("fock(4)", make_fock(4));
  out.emplace_back("pac(p=2, alpha=1)", pac_state(2, 1.0));
  out.emplace_back("pasv(p=1, r=0.6)", pasv_state(hooks, 1, 0.6, 0.0));
  return out;
}

CheckResult check_q_normalization(const VerifyHooks& hooks) {
  return timed("10a", "Grid quadrature of Q equals 1", [&](Tally& t) {
    for (const auto& [name, s] : normalization_states(hooks)) {
      const double radius = 3.0 * std::sqrt(mean_photon(s)) + 5.0;
      const double mass = q_grid(s, Window::square(radius), odd_resolution(2.0 * radius, 0.2)).integral();
      t.track(std::abs(mass - 1.0));
      t.expect(std::abs(mass - 1.0) <= 1e-3, name + fmt(" integrates to %.6g", mass));
    }
    return std::string("5 families");
  });
}

CheckResult check_w_normalization(const VerifyHooks& hooks) {
  return timed("10b", "Grid quadrature of W equals 1", [&](Tally& t) {
    for (const auto& [name, s] : normalization_states(hooks)) {
      const double radius = 2.0 * std::sqrt(mean_photon(s)) + 5.0;
      const double mass =
          wigner_grid(s, Window::square(radius), odd_resolution(2.0 * radius, 0.25)).integral();
      t.track(std::abs(mass - 1.0));
      t.expect(std::abs(mass - 1.0) <= 1e-2, name + fmt(" integrates to %.6g", mass));
    }
    return std::string("5 families");
  });
}

CheckResult check_svs_q_closed_form(const VerifyHooks& hooks) {
  return timed("S", "Squeezed-vacuum Q matches its closed form (sign convention)", [&](Tally& t) {
    std::mt19937_64 rng(20260103);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int k = 0; k < 100; ++k) {
      const double r = 2.0 * unit(rng);
      const double phi = 2.0 * kPi * unit(rng);
      const auto beta = std::polar(3.0 * std::sqrt(unit(rng)), 2.0 * kPi * unit(rng));
      const FockState s = hooks.squeezed_vacuum(r, phi, 0);
      const double numeric = q_value(s, PhasePoint::from(beta));
      const double expected =
          std::exp(-std::norm(beta) * (1.0 - std::tanh(r) * std::cos(phi - 2.0 * std::arg(beta)))) /
          (kPi * std::cosh(r));
      const double err = rel_err(numeric, expected);
      t.track(err);
      t.expect(err <= 1e-10, fmt("r=%.3g phi=%.3g relative error %.3g", r, phi, err));
    }
    return std::string("100 random (r <= 2, phi, |beta| <= 3)");
  });
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyHooks& hooks) {
  const auto start = Clock::now();
  std::vector<CheckResult> results;
  results.push_back(check_fock_degrees());
  results.push_back(check_pac());
  results.push_back(check_svs_correlations(hooks));
  results.push_back(check_pasv(hooks));
  results.push_back(check_enhancement_inequalities());
  results.push_back(check_strong_squeezing());
  results.push_back(check_fig3_minimum());
  results.push_back(check_displacement_invariance(hooks));
  results.push_back(check_rotation_invariance(hooks));
  results.push_back(check_wigner(hooks));
  results.push_back(check_q_normalization(hooks));
  results.push_back(check_w_normalization(hooks));
  results.push_back(check_svs_q_closed_form(hooks));
  const double total = std::chrono::duration<double>(Clock::now() - start).count();
  results.push_back({"11", "Whole suite finishes within 60 s", total < 60.0,
                     fmt("%.2f s", total), total});
  return results;
}

bool print_verification(const std::vector<CheckResult>& results, std::ostream& out) {
  bool all = true;
  for (const auto& r : results) {
    char head[64];
    std::snprintf(head, sizeof head, "%s %-4s %7.2fs  ", r.passed ? "PASS" : "FAIL", r.id.c_str(), r.seconds);
    out << head << r.title << " -- " << r.detail << '\n';
    all = all && r.passed;
  }
  const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  out << passed << '/' << results.size() << " checks passed\n";
  return all;
}

}  // namespace nonclass
