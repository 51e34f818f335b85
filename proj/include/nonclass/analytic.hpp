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

// Closed-form Q maxima and geometric non-classicality degrees
// D_Q = 1 - pi Q_max for photon-added coherent states, Fock states,
// squeezed vacua and photon-added squeezed vacua.
//
// Photon-number-dependent prefactors are assembled in log space, so p can
// range into the tens of thousands.

#pragma once

namespace nonclass::analytic {

// p photons added to a coherent state of mean occupancy |alpha|^2.
struct PacParams {
  int p = 1;
  double alpha_sq = 0.0;
};

// p photons added to a squeezed vacuum S(r, phi)|0>. phi rotates the
// maximizer (arg beta_max = phi/2) but never changes any maximum value.
struct PasvParams {
  int p = 0;
  double r = 0.0;
  double phi = 0.0;
};

struct FockNonclassicality {
  double qmax;
  double dq;
  double dq_asymptotic;  // 1 - 1/sqrt(2 pi p)
};

struct PasvMaximum {
  double qmax;
  double beta_max_modulus_sq;
};

struct StrongSqueezingLimits {
  double ratio_to_svs;      // lim Q_p^max / Q_0^max
  double ratio_successive;  // lim Q_{p+1}^max / Q_p^max
};

double qmax_pac(const PacParams& params);
double dq_pac(const PacParams& params);

FockNonclassicality fock_nonclassicality(int p);

double svs_qmax(double r);
double svs_dq(double r);

// <a^p (a^dagger)^p> of the squeezed vacuum.
double svs_antinormal(int p, double r);

PasvMaximum pasv_qmax(const PasvParams& params);
double pasv_dq(const PasvParams& params);

StrongSqueezingLimits strong_squeezing_limits(int p);

}  // namespace nonclass::analytic
