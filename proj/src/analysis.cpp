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

#include "rectimesh/analysis.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "rectimesh/error.hpp"

namespace rectimesh {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::invalid_argument, what);
}

double sum_db(const std::vector<LabeledDb>& items) {
  double s = 0.0;
  for (const auto& it : items) s += it.db;
  return s;
}

}  // namespace

double received_power(const LinkBudget& b) {
  return b.p_tx + sum_db(b.gains) - sum_db(b.losses);
}

double eirp(double p_tx_dbm, double l_tx_db, double g_tx_dbi) {
  return p_tx_dbm - l_tx_db + g_tx_dbi;
}

double fspl(double distance, double frequency, double c) {
  require(distance > 0.0 && frequency > 0.0, "fspl: distance and frequency must be positive");
  require(c > 0.0, "fspl: c must be positive");
  return 20.0 * std::log10(4.0 * std::numbers::pi * distance * frequency / c);
}

double fspl_wavelength(double distance, double wavelength) {
  require(distance > 0.0 && wavelength > 0.0, "fspl: distance and wavelength must be positive");
  const double r = 4.0 * std::numbers::pi * distance / wavelength;
  return 10.0 * std::log10(r * r);
}

double snell_refraction(double theta_i, double n1, double n2) {
  require(theta_i >= 0.0 && theta_i < std::numbers::pi / 2, "snell: theta_i must be in [0, pi/2)");
  require(n1 > 0.0 && n2 > 0.0, "snell: refractive indices must be positive");
  if (n1 == n2) return theta_i;
  const double s = std::sin(theta_i) * n1 / n2;
  if (s > 1.0) {
    throw Error(ErrorCode::total_internal_reflection,
                "snell: total internal reflection (sin(theta_r) = " + std::to_string(s) + ")");
  }
  return std::asin(s);
}

double atom_channel_gain(double aperture, double distance) {
  require(aperture > 0.0 && distance > 0.0, "atom gain: aperture and distance must be positive");
  return aperture / (4.0 * std::numbers::pi * distance * distance);
}

double e2e_channel_gain(double aperture, double d_g, double d_h, std::uint64_t atoms) {
  require(aperture > 0.0 && d_g > 0.0 && d_h > 0.0, "e2e gain: inputs must be positive");
  require(atoms >= 1, "e2e gain: atom count must be >= 1");
  const double denom = 4.0 * std::numbers::pi * d_g * d_h;
  const double single = (aperture * aperture) / (denom * denom);
  const double m = static_cast<double>(atoms);
  return (m * m) * single;
}

cplx composite_channel(std::span<const cplx> g, std::span<const cplx> h,
                       std::span<const double> phi) {
  if (g.size() != h.size() || g.size() != phi.size()) {
    throw Error(ErrorCode::length_mismatch, "composite channel: g, h and phi lengths differ");
  }
  cplx k{0.0, 0.0};
  for (std::size_t n = 0; n < g.size(); ++n) k += g[n] * std::polar(1.0, phi[n]) * h[n];
  return k;
}

cplx composite_channel(const RisChannel& ch) {
  require(ch.aperture > 0.0 && ch.d_g > 0.0 && ch.d_h > 0.0,
          "RIS channel: aperture and distances must be positive");
  return composite_channel(ch.g, ch.h, ch.phi);
}

std::vector<double> optimal_phases(std::span<const cplx> g, std::span<const cplx> h) {
  if (g.size() != h.size()) {
    throw Error(ErrorCode::length_mismatch, "optimal phases: g and h lengths differ");
  }
  std::vector<double> phi(g.size(), 0.0);
  for (std::size_t n = 0; n < g.size(); ++n) {
    const cplx gh = g[n] * h[n];
    if (gh != cplx{0.0, 0.0}) phi[n] = -std::arg(gh);
  }
  return phi;
}

double coherent_bound(std::span<const cplx> g, std::span<const cplx> h) {
  if (g.size() != h.size()) {
    throw Error(ErrorCode::length_mismatch, "coherent bound: g and h lengths differ");
  }
  double s = 0.0;
  for (std::size_t n = 0; n < g.size(); ++n) s += std::abs(g[n]) * std::abs(h[n]);
  return s;
}

int sidelobe_count(double p) {
  require(p > 0.0 && std::isfinite(p), "sidelobe count: p must be positive");
  const double twice = std::round(2.0 * p);
  return std::max(static_cast<int>(twice) - 1, 0);
}

bool sidelobe_law_applies(double p) {
  return p > 0.0 && std::abs(2.0 * p - std::round(2.0 * p)) <= 1e-9;
}

std::int64_t fem_sweep_points(double f0, double f1, double df) {
  require(df > 0.0, "sweep points: df must be positive");
  require(f1 >= f0, "sweep points: f1 must be >= f0");
  const double q = (f1 - f0) / df;
  const double r = std::round(q);
  if (std::abs(q - r) <= 1e-9) return static_cast<std::int64_t>(r);
  return static_cast<std::int64_t>(std::floor(q));
}

}  // namespace rectimesh
