// Copyright 2026 The rectimesh Authors.
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

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rectimesh/meshgen.hpp"

namespace rectimesh {

using cplx = std::complex<double>;

struct LabeledDb {
  std::string label;
  double db = 0.0;
};

struct LinkBudget {
  double p_tx = 0.0;  // dBm
  std::vector<LabeledDb> gains;
  std::vector<LabeledDb> losses;
};

// P_RX = P_TX + sum(gains) - sum(losses), in dBm.
double received_power(const LinkBudget& budget);

// EIRP = P_TX - L_TX + G_TX, in dBm.
double eirp(double p_tx_dbm, double l_tx_db, double g_tx_dbi);

// Free-space path loss in dB, 20 log10(4 pi d f / c).
double fspl(double distance, double frequency, double c = kSpeedOfLight);
// Same loss from the wavelength form, 10 log10((4 pi d / lambda)^2).
double fspl_wavelength(double distance, double wavelength);

// Refraction angle from sin(theta_r) / sin(theta_i) = n1 / n2. Returns
// theta_i unchanged when n1 == n2. Throws total_internal_reflection when no
// real solution exists.
double snell_refraction(double theta_i, double n1, double n2);

// Far-field gain of a single meta-atom, A / (4 pi d^2).
double atom_channel_gain(double aperture, double distance);

// End-to-end gain of an m-atom surface, m^2 A^2 / (4 pi d_g d_h)^2.
double e2e_channel_gain(double aperture, double d_g, double d_h, std::uint64_t atoms);

struct RisChannel {
  std::vector<cplx> g;    // transmitter -> atom
  std::vector<cplx> h;    // atom -> receiver
  std::vector<double> phi;  // per-atom phase, radians
  double aperture = 1.0;
  double d_g = 1.0;
  double d_h = 1.0;
};

// k = sum_n g_n exp(j phi_n) h_n
cplx composite_channel(std::span<const cplx> g, std::span<const cplx> h,
                       std::span<const double> phi);
cplx composite_channel(const RisChannel& ch);

// phi_n = -arg(g_n h_n), which co-phases every term of the composite
// channel. Atoms with a zero channel product get phase 0.
std::vector<double> optimal_phases(std::span<const cplx> g, std::span<const cplx> h);

// Sum of |g_n||h_n|, the modulus reached under optimal_phases.
double coherent_bound(std::span<const cplx> g, std::span<const cplx> h);

// Predicted sidelobe count 2p - 1 for a square plate of side p wavelengths,
// clamped at zero. The law is stated for half-integer multiples only; see
// sidelobe_law_applies().
int sidelobe_count(double p);
bool sidelobe_law_applies(double p);

// Number of frequency points (f1 - f0) / df.
std::int64_t fem_sweep_points(double f0, double f1, double df);

}  // namespace rectimesh
