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
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "rectimesh/scene.hpp"

namespace rectimesh {

inline constexpr double kSpeedOfLight = 299'792'458.0;

struct ExcitationSpec {
  double f_min = 0.0;  // Hz
  double f_max = 0.0;  // Hz
  double c = kSpeedOfLight;
};

/// Inputs of the grid generator.
///
/// The first three members are wavelength fractions relative to the shortest
/// excitation wavelength: a value of 40 means cells of lambda_min / 40.
struct MeshParams {
  double max_cell_model = 40.0;   // local resolution inside the model
  double max_cell_space = 30.0;   // resolution of the surrounding free space
  double min_cell_global = 300.0; // floor on every cell edge
  std::array<int, 3> n = {3, 3, 3};                     // fan lines per side
  std::array<double, 3> res_fraction = {6.0, 6.0, 6.0}; // clustering tolerance
  int pml_n = 8;
  double grading_ratio = 2.0;
};

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool overlaps(double a, double b) const { return a < hi && b > lo; }
};

struct AxisMesh {
  std::vector<double> lines;  // strictly increasing, meters
  Interval model_interval;

  std::size_t cell_count() const { return lines.empty() ? 0 : lines.size() - 1; }
  double min_cell() const;
};

struct Grid {
  AxisMesh x, y, z;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double lambda_mid_quarter = 0.0;
  double dt_max = 0.0;
  std::vector<std::string> warnings;

  const AxisMesh& axis(Axis a) const;
  AxisMesh& axis(Axis a);
};

struct Wavelengths {
  double min = 0.0;
  double max = 0.0;
};

struct CellCounts {
  std::uint64_t nx = 0, ny = 0, nz = 0, total = 0;

  friend bool operator==(const CellCounts&, const CellCounts&) = default;
};

enum class Execution { serial, concurrent };

// lambda_min = c / f_max, lambda_max = c / f_min. A DC component (f_min <= 0)
// would push the boundary to infinity and is rejected.
Wavelengths wavelengths(const ExcitationSpec& exc);

// Quarter of the mid-band wavelength:
// (lambda_min * lambda_max) / (2 (lambda_min + lambda_max)).
double boundary_gap(double lambda_min, double lambda_max);

// Throws on invalid parameters; returns the non-fatal advisories.
std::vector<std::string> validate(const MeshParams& params);

// Fan-centre selection. Anchors chained by gaps below `tolerance` form one
// cluster; a singleton keeps its anchor, a cluster narrower than
// `epsilon_merge` is represented by its midpoint, and any wider cluster by
// its two extreme coordinates.
std::vector<double> cluster_sites(std::span<const double> anchors, double tolerance,
                                  double epsilon_merge);

struct RefineRequest {
  std::vector<double> anchors;  // protected lines, strictly increasing
  std::vector<double> sites;    // fan centres; empty means "every anchor"
  Interval bounds;              // fan lines outside are discarded
};

// Inserts params.n[axis] lines on each side of every site at offsets
// h / r^(n-k+1), k = 1..n, with h = lambda_min / max_cell_model and
// r = grading_ratio. A fan line is dropped when it is closer than
// epsilon_merge to a protected line, to the previous line of its own fan,
// or to the territory of a neighbouring site.
std::vector<double> refine_axis(const RefineRequest& request, const MeshParams& params,
                                Axis axis, double lambda_min);
std::vector<double> refine_axis(std::span<const double> anchors, const MeshParams& params,
                                Axis axis, double lambda_min);

// Greedy left-to-right pass dropping lines closer than epsilon_merge to the
// previously kept line. Lines listed in `anchors` always survive; if an
// anchor collides with a kept non-anchor, the non-anchor goes.
std::vector<double> merge_lines(std::span<const double> lines, double epsilon_merge,
                                std::span<const double> anchors = {});

std::vector<double> fill_gaps(std::span<const double> lines, Interval model_interval,
                              double lambda_min, const MeshParams& params);

std::vector<double> add_boundary_and_pml(std::span<const double> axis_lines, double gap,
                                         int pml_n, double space_cell);

double cfl_timestep(double dx_min, double dy_min, double dz_min, double c = kSpeedOfLight);

// Runs the full per-axis pipeline. Scene must contain at least one shape.
Grid generate(const SceneNode& scene_root, const ExcitationSpec& exc,
              const MeshParams& params, Execution execution = Execution::concurrent);

AxisMesh generate_axis(std::span<const Shape> shapes, Axis axis, const ExcitationSpec& exc,
                       const MeshParams& params);

CellCounts make_cell_counts(std::uint64_t nx, std::uint64_t ny, std::uint64_t nz);
CellCounts cell_counts(const Grid& grid);

}  // namespace rectimesh
