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

#include "rectimesh/scatter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>

#include "rectimesh/error.hpp"

namespace rectimesh {

namespace {

constexpr double kProminence = 1e-6;
// Eight Gauss-Legendre nodes per panel, eight panels per wavelength.
constexpr int kPanelsPerWavelength = 8;

void check_plate(const PlateSpec& plate) {
  if (!(plate.p > 0.0) || !(plate.lambda > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "plate: p and lambda must be positive");
  }
  if (!(plate.theta_i >= 0.0 && plate.theta_i < std::numbers::pi / 2)) {
    throw Error(ErrorCode::invalid_argument, "plate: theta_i must be in [0, pi/2)");
  }
}

double closed_form(const PlateSpec& plate, double theta_s) {
  const double a = plate.p * plate.lambda;
  const double x = std::numbers::pi * plate.p * (std::sin(plate.theta_i) - std::sin(theta_s));
  const double sinc = x == 0.0 ? 1.0 : std::sin(x) / x;
  return a * a * sinc * sinc;
}

double quadrature(const PlateSpec& plate, double theta_s) {
  using boost::math::quadrature::gauss;
  const double a = plate.p * plate.lambda;
  const double beta =
      2.0 * std::numbers::pi / plate.lambda * (std::sin(plate.theta_i) - std::sin(theta_s));
  const auto panels = static_cast<int>(std::ceil(plate.p * kPanelsPerWavelength));
  const double width = a / panels;
  double re = 0.0;
  double im = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double x0 = k * width;
    const double x1 = k + 1 == panels ? a : (k + 1) * width;
    re += gauss<double, 8>::integrate([beta](double x) { return std::cos(beta * x); }, x0, x1);
    im += gauss<double, 8>::integrate([beta](double x) { return std::sin(beta * x); }, x0, x1);
  }
  return re * re + im * im;
}

}  // namespace

std::vector<double> observation_angles(int samples) {
  if (samples < kMinPatternSamples) {
    throw Error(ErrorCode::out_of_range,
                "pattern needs at least " + std::to_string(kMinPatternSamples) + " samples");
  }
  std::vector<double> angles(static_cast<std::size_t>(samples));
  const double span = samples - 1;
  for (int k = 0; k < samples; ++k) {
    angles[static_cast<std::size_t>(k)] = (2.0 * k - span) / span * (std::numbers::pi / 2);
  }
  return angles;
}

double aperture_intensity(const PlateSpec& plate, double theta_s, PatternMethod method) {
  check_plate(plate);
  return method == PatternMethod::closed_form ? closed_form(plate, theta_s)
                                              : quadrature(plate, theta_s);
}

ScatterPattern po_pattern(const PlateSpec& plate, int samples, PatternMethod method) {
  check_plate(plate);
  ScatterPattern pat;
  pat.angles = observation_angles(samples);
  pat.values.reserve(pat.angles.size());
  for (double t : pat.angles) pat.values.push_back(aperture_intensity(plate, t, method));
  pat.peak_intensity = *std::max_element(pat.values.begin(), pat.values.end());
  for (double& v : pat.values) v /= pat.peak_intensity;
  return pat;
}

std::size_t peak_index(const ScatterPattern& pattern) {
  if (pattern.values.empty()) throw Error(ErrorCode::invalid_argument, "empty pattern");
  return static_cast<std::size_t>(
      std::max_element(pattern.values.begin(), pattern.values.end()) - pattern.values.begin());
}

double peak_angle(const ScatterPattern& pattern) { return pattern.angles[peak_index(pattern)]; }

int count_sidelobes(const ScatterPattern& pattern) {
  const auto& v = pattern.values;
  if (v.size() < 3) return 0;
  const std::size_t peak = peak_index(pattern);
  const double threshold = kProminence * v[peak];
  int count = 0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (i == peak || !(v[i] > v[i - 1] && v[i] > v[i + 1])) continue;
    // Valley floor on each side: descend until the curve turns upward.
    std::size_t l = i;
    while (l > 0 && v[l - 1] <= v[l]) --l;
    std::size_t r = i;
    while (r + 1 < v.size() && v[r + 1] <= v[r]) ++r;
    const double prominence = v[i] - std::max(v[l], v[r]);
    if (prominence > threshold) ++count;
  }
  return count;
}

double hpbw(const ScatterPattern& pattern) {
  const auto& v = pattern.values;
  const auto& t = pattern.angles;
  const std::size_t peak = peak_index(pattern);
  const double half = 0.5 * v[peak];

  std::size_t l = peak;
  while (l > 0 && v[l - 1] >= half) --l;
  std::size_t r = peak;
  while (r + 1 < v.size() && v[r + 1] >= half) ++r;
  if (l == 0 || r + 1 == v.size()) {
    throw Error(ErrorCode::truncated_lobe, "main lobe is truncated by the domain edge");
  }
  auto crossing = [&](std::size_t below, std::size_t above) {
    const double f = (half - v[below]) / (v[above] - v[below]);
    return t[below] + f * (t[above] - t[below]);
  };
  return crossing(r + 1, r) - crossing(l - 1, l);
}

Vec3 poynting(const Vec3& e, const Vec3& h) {
  return {e[1] * h[2] - e[2] * h[1], e[2] * h[0] - e[0] * h[2], e[0] * h[1] - e[1] * h[0]};
}

double rcs_from_fields(double e_scattered, double e_incident, double r) {
  if (e_incident == 0.0) throw Error(ErrorCode::invalid_argument, "RCS: incident field is zero");
  if (!(r > 0.0)) throw Error(ErrorCode::invalid_argument, "RCS: distance must be positive");
  const double ratio = std::abs(e_scattered) / std::abs(e_incident);
  return 4.0 * std::numbers::pi * r * r * ratio * ratio;
}

}  // namespace rectimesh
