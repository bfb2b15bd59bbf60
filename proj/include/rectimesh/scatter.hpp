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

#include <array>
#include <cstddef>
#include <vector>

namespace rectimesh {

using Vec3 = std::array<double, 3>;

struct PlateSpec {
  double p = 1.0;        // side length in wavelengths, a = b = p * lambda
  double lambda = 1.0;   // meters
  double theta_i = 0.0;  // incidence from the surface normal, radians
};

// In-plane cut of the plate response. `angles` are uniformly spaced over
// [-pi/2, pi/2]; `values` are peak-normalized linear intensities.
struct ScatterPattern {
  std::vector<double> angles;
  std::vector<double> values;
  double peak_intensity = 0.0;  // before normalization, m^2
};

enum class PatternMethod { closed_form, quadrature };

inline constexpr int kMinPatternSamples = 181;

// Observation grid; symmetric about zero to the last bit.
std::vector<double> observation_angles(int samples);

// Un-normalized |integral_0^a exp(j k (sin theta_i - sin theta_s) x) dx|^2.
double aperture_intensity(const PlateSpec& plate, double theta_s, PatternMethod method);

ScatterPattern po_pattern(const PlateSpec& plate, int samples,
                          PatternMethod method = PatternMethod::closed_form);

std::size_t peak_index(const ScatterPattern& pattern);
double peak_angle(const ScatterPattern& pattern);

// Interior strict local maxima other than the global one whose prominence
// exceeds 1e-6 of the peak.
int count_sidelobes(const ScatterPattern& pattern);

// Main-lobe width at half the peak, with linear interpolation between
// samples. Throws truncated_lobe when the lobe runs into the domain edge.
double hpbw(const ScatterPattern& pattern);

Vec3 poynting(const Vec3& e, const Vec3& h);

// 4 pi r^2 |E_s|^2 / |E_i|^2
double rcs_from_fields(double e_scattered, double e_incident, double r);

}  // namespace rectimesh
