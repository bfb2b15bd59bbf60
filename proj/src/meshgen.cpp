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

#include "rectimesh/meshgen.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

#include "rectimesh/error.hpp"

namespace rectimesh {

namespace {

// Relative slack when counting how many cells a gap needs, so that a gap of
// exactly k*h is not split into k+1 cells by rounding noise.
constexpr double kCeilSlack = 1e-9;

bool contains_exact(std::span<const double> sorted, double v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

double distance_to_nearest(std::span<const double> sorted, double v) {
  if (sorted.empty()) return std::numeric_limits<double>::infinity();
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  double d = std::numeric_limits<double>::infinity();
  if (it != sorted.end()) d = *it - v;
  if (it != sorted.begin()) d = std::min(d, v - *std::prev(it));
  return d;
}

void sort_unique(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::size_t cells_for(double width, double h) {
  return static_cast<std::size_t>(std::max(1.0, std::ceil(width / h - kCeilSlack)));
}

}  // namespace

double AxisMesh::min_cell() const {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < lines.size(); ++i) m = std::min(m, lines[i] - lines[i - 1]);
  return m;
}

const AxisMesh& Grid::axis(Axis a) const {
  switch (a) {
    case Axis::x: return x;
    case Axis::y: return y;
    default: return z;
  }
}

AxisMesh& Grid::axis(Axis a) {
  return const_cast<AxisMesh&>(static_cast<const Grid&>(*this).axis(a));
}

Wavelengths wavelengths(const ExcitationSpec& exc) {
  if (!(exc.f_min > 0.0)) {
    throw Error(ErrorCode::dc_excitation,
                "f_min must be > 0: a DC component makes the quarter-wavelength "
                "boundary spacing infinitely large");
  }
  if (!(exc.f_max >= exc.f_min) || !std::isfinite(exc.f_max)) {
    throw Error(ErrorCode::invalid_argument, "f_max must be finite and >= f_min");
  }
  if (!(exc.c > 0.0) || !std::isfinite(exc.c)) {
    throw Error(ErrorCode::invalid_argument, "propagation speed must be positive");
  }
  return {exc.c / exc.f_max, exc.c / exc.f_min};
}

double boundary_gap(double lambda_min, double lambda_max) {
  if (!(lambda_min > 0.0) || !(lambda_max >= lambda_min)) {
    throw Error(ErrorCode::invalid_argument, "boundary_gap requires 0 < lambda_min <= lambda_max");
  }
  if (std::isinf(lambda_max)) return lambda_min / 2.0;
  return (lambda_min * lambda_max) / (2.0 * (lambda_min + lambda_max));
}

std::vector<std::string> validate(const MeshParams& p) {
  auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
  if (!positive(p.max_cell_model) || !positive(p.max_cell_space) ||
      !positive(p.min_cell_global)) {
    throw Error(ErrorCode::invalid_argument,
                "max_cell_model, max_cell_space and min_cell_global must be positive");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (p.n[i] < 0) throw Error(ErrorCode::invalid_argument, "n must be non-negative");
    if (!positive(p.res_fraction[i])) {
      throw Error(ErrorCode::invalid_argument, "res_fraction must be positive");
    }
  }
  if (p.pml_n < 4 || p.pml_n > 50) {
    throw Error(ErrorCode::out_of_range,
                "pml_n = " + std::to_string(p.pml_n) + " is outside [4, 50]");
  }
  if (!(p.grading_ratio > 1.0) || !std::isfinite(p.grading_ratio)) {
    throw Error(ErrorCode::invalid_argument, "grading_ratio must be > 1");
  }

  std::vector<std::string> warnings;
  if (p.max_cell_model <= p.max_cell_space) {
    warnings.emplace_back(
        "max_cell_model <= max_cell_space: the model is meshed no finer than free space");
  }
  if (p.min_cell_global < 2.0 * p.max_cell_model) {
    warnings.emplace_back(
        "min_cell_global < 2 * max_cell_model: the global floor may override the "
        "local cell ceiling");
  }
  return warnings;
}

std::vector<double> cluster_sites(std::span<const double> anchors, double tolerance,
                                  double epsilon_merge) {
  std::vector<double> sites;
  std::size_t first = 0;
  while (first < anchors.size()) {
    std::size_t last = first;
    while (last + 1 < anchors.size() && anchors[last + 1] - anchors[last] < tolerance) ++last;
    const double lo = anchors[first];
    const double hi = anchors[last];
    if (first == last) {
      sites.push_back(lo);
    } else if (hi - lo < epsilon_merge) {
      sites.push_back(0.5 * (lo + hi));
    } else {
      sites.push_back(lo);
      sites.push_back(hi);
    }
    first = last + 1;
  }
  return sites;
}

std::vector<double> refine_axis(const RefineRequest& req, const MeshParams& params, Axis axis,
                                double lambda_min) {
  const std::span<const double> anchors = req.anchors;
  const std::span<const double> sites =
      req.sites.empty() ? anchors : std::span<const double>(req.sites);
  const int n = params.n[index(axis)];
  const double h = lambda_min / params.max_cell_model;
  const double eps = lambda_min / params.min_cell_global;

  // Fan offsets, innermost first, thinned so that successive lines of one fan
  // are at least eps apart.
  std::vector<double> offsets;
  double last = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double d = h / std::pow(params.grading_ratio, n - k + 1);
    if (d - last >= eps) {
      offsets.push_back(d);
      last = d;
    }
  }

  std::vector<double> out(anchors.begin(), anchors.end());
  out.reserve(anchors.size() + 2 * offsets.size() * sites.size());
  for (std::size_t j = 0; j < sites.size(); ++j) {
    const double s = sites[j];
    const double left_limit =
        j > 0 ? 0.5 * (sites[j - 1] + s) + 0.5 * eps : req.bounds.lo;
    const double right_limit =
        j + 1 < sites.size() ? 0.5 * (s + sites[j + 1]) - 0.5 * eps : req.bounds.hi;
    for (double d : offsets) {
      for (double candidate : {s - d, s + d}) {
        if (candidate < left_limit || candidate > right_limit) continue;
        if (candidate < req.bounds.lo || candidate > req.bounds.hi) continue;
        if (distance_to_nearest(anchors, candidate) < eps) continue;
        out.push_back(candidate);
      }
    }
  }
  sort_unique(out);
  return out;
}

std::vector<double> refine_axis(std::span<const double> anchors, const MeshParams& params,
                                Axis axis, double lambda_min) {
  RefineRequest req;
  req.anchors.assign(anchors.begin(), anchors.end());
  return refine_axis(req, params, axis, lambda_min);
}

std::vector<double> merge_lines(std::span<const double> lines, double epsilon_merge,
                                std::span<const double> anchors) {
  auto is_anchor = [&](double v) { return contains_exact(anchors, v); };
  std::vector<double> kept;
  kept.reserve(lines.size());
  for (double x : lines) {
    if (kept.empty()) {
      kept.push_back(x);
      continue;
    }
    if (x == kept.back()) continue;
    if (x - kept.back() >= epsilon_merge) {
      kept.push_back(x);
      continue;
    }
    if (!is_anchor(x)) continue;
    while (!kept.empty() && !is_anchor(kept.back()) && x - kept.back() < epsilon_merge) {
      kept.pop_back();
    }
    kept.push_back(x);
  }
  return kept;
}

std::vector<double> fill_gaps(std::span<const double> lines, Interval model_interval,
                              double lambda_min, const MeshParams& params) {
  const double h_model = lambda_min / params.max_cell_model;
  const double h_space = lambda_min / params.max_cell_space;
  std::vector<double> out;
  if (lines.empty()) return out;
  out.reserve(lines.size());
  out.push_back(lines.front());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const double a = lines[i - 1];
    const double b = lines[i];
    const double width = b - a;
    // A degenerate (zero-width) model interval still claims the gap that
    // strictly contains it.
    const bool in_model = model_interval.lo == model_interval.hi
                              ? (a < model_interval.lo && b > model_interval.lo)
                              : model_interval.overlaps(a, b);
    const double h = in_model ? h_model : h_space;
    const std::size_t k = cells_for(width, h);
    for (std::size_t c = 1; c < k; ++c) {
      out.push_back(a + width * static_cast<double>(c) / static_cast<double>(k));
    }
    out.push_back(b);
  }
  return out;
}

std::vector<double> add_boundary_and_pml(std::span<const double> axis_lines, double gap,
                                         int pml_n, double space_cell) {
  if (pml_n < 4 || pml_n > 50) {
    throw Error(ErrorCode::out_of_range,
                "pml_n = " + std::to_string(pml_n) + " is outside [4, 50]");
  }
  if (axis_lines.empty()) throw Error(ErrorCode::invalid_argument, "no lines to pad");
  if (!(gap >= 0.0) || !(space_cell > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "gap must be >= 0 and space_cell > 0");
  }
  const double front = axis_lines.front();
  const double back = axis_lines.back();
  const std::size_t gap_cells = gap > 0.0 ? cells_for(gap, space_cell) : 0;
  const double gap_step = gap_cells ? gap / static_cast<double>(gap_cells) : 0.0;

  std::vector<double> out;
  out.reserve(axis_lines.size() + 2 * (gap_cells + static_cast<std::size_t>(pml_n)));
  const double outer_lo = front - gap;
  for (int k = pml_n; k >= 1; --k) out.push_back(outer_lo - k * space_cell);
  for (std::size_t k = gap_cells; k >= 1; --k) {
    out.push_back(k == gap_cells ? outer_lo : front - static_cast<double>(k) * gap_step);
  }
  out.insert(out.end(), axis_lines.begin(), axis_lines.end());
  const double outer_hi = back + gap;
  for (std::size_t k = 1; k <= gap_cells; ++k) {
    out.push_back(k == gap_cells ? outer_hi : back + static_cast<double>(k) * gap_step);
  }
  for (int k = 1; k <= pml_n; ++k) out.push_back(outer_hi + k * space_cell);
  return out;
}

double cfl_timestep(double dx_min, double dy_min, double dz_min, double c) {
  if (!(dx_min > 0.0) || !(dy_min > 0.0) || !(dz_min > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "CFL: cell edges must be positive");
  }
  if (!(c > 0.0)) throw Error(ErrorCode::invalid_argument, "CFL: c must be positive");
  const double s = 1.0 / (dx_min * dx_min) + 1.0 / (dy_min * dy_min) + 1.0 / (dz_min * dz_min);
  return 1.0 / (c * std::sqrt(s));
}

AxisMesh generate_axis(std::span<const Shape> shapes, Axis axis, const ExcitationSpec& exc,
                       const MeshParams& params) {
  const Wavelengths wl = wavelengths(exc);
  const BoundingBox bbox = scene_bbox(shapes);
  const std::size_t i = index(axis);
  const Interval model{bbox.min[i], bbox.max[i]};

  const double gap = boundary_gap(wl.min, wl.max);
  const double eps = wl.min / params.min_cell_global;
  const double space_cell = wl.min / params.max_cell_space;
  const double tolerance = wl.min / params.res_fraction[i];

  const std::vector<double> vertices = axis_vertex_coords(shapes, axis);

  // The free-space edges are protected like vertices so the gap is measured
  // from the model face rather than from the outermost fan line.
  RefineRequest req;
  req.anchors = vertices;
  req.anchors.push_back(model.lo - gap);
  req.anchors.push_back(model.hi + gap);
  sort_unique(req.anchors);
  req.sites = cluster_sites(vertices, tolerance, eps);
  req.bounds = {model.lo - gap, model.hi + gap};

  std::vector<double> lines = refine_axis(req, params, axis, wl.min);
  lines = fill_gaps(lines, model, wl.min, params);
  lines = merge_lines(lines, eps, req.anchors);
  lines = add_boundary_and_pml(lines, 0.0, params.pml_n, space_cell);
  return AxisMesh{std::move(lines), model};
}

Grid generate(const SceneNode& scene_root, const ExcitationSpec& exc, const MeshParams& params,
              Execution execution) {
  Grid grid;
  grid.warnings = validate(params);
  const Wavelengths wl = wavelengths(exc);
  grid.lambda_min = wl.min;
  grid.lambda_max = wl.max;
  grid.lambda_mid_quarter = boundary_gap(wl.min, wl.max);

  const std::vector<Shape> shapes = dfs_shapes(scene_root);
  if (shapes.empty()) throw Error(ErrorCode::empty_scene, "scene contains no shapes");

  if (execution == Execution::concurrent) {
    std::array<std::future<AxisMesh>, 3> jobs;
    for (Axis a : kAxes) {
      jobs[index(a)] = std::async(std::launch::async, [&, a] {
        return generate_axis(shapes, a, exc, params);
      });
    }
    for (Axis a : kAxes) grid.axis(a) = jobs[index(a)].get();
  } else {
    for (Axis a : kAxes) grid.axis(a) = generate_axis(shapes, a, exc, params);
  }

  grid.dt_max = cfl_timestep(grid.x.min_cell(), grid.y.min_cell(), grid.z.min_cell(), exc.c);
  return grid;
}

CellCounts make_cell_counts(std::uint64_t nx, std::uint64_t ny, std::uint64_t nz) {
  CellCounts c{nx, ny, nz, 0};
  std::uint64_t t = 0;
  if (__builtin_mul_overflow(nx, ny, &t) || __builtin_mul_overflow(t, nz, &t)) {
    throw Error(ErrorCode::out_of_range, "cell count overflows 64 bits");
  }
  c.total = t;
  return c;
}

CellCounts cell_counts(const Grid& grid) {
  return make_cell_counts(grid.x.cell_count(), grid.y.cell_count(), grid.z.cell_count());
}

}  // namespace rectimesh
