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

// Shared test helpers: scene generators, the mesh invariant checker and
// oracles that do not go through the library's own code paths.

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "rectimesh/meshgen.hpp"
#include "rectimesh/scene.hpp"

#ifndef RECTIMESH_FIXTURE_DIR
#error "RECTIMESH_FIXTURE_DIR must be defined"
#endif

namespace rectimesh::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(RECTIMESH_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 30 GHz single-frequency excitation with the 40/30/300 parameter set.
inline ExcitationSpec ka_band() { return {30e9, 30e9}; }

inline MeshParams reference_params() {
  MeshParams p;
  p.max_cell_model = 40;
  p.max_cell_space = 30;
  p.min_cell_global = 300;
  return p;
}

// Boxes with random extents (some flat on one axis) inside a cube of side
// `extent`, plus a few vertex sets, wrapped in random compound nesting.
inline SceneNode random_scene(std::uint64_t seed, int shapes, double extent) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> pos(0.0, extent);
  std::uniform_real_distribution<double> size(0.0005, 0.15 * extent);
  std::uniform_real_distribution<double> eps(1.0, 10.0);
  std::uniform_int_distribution<int> coin(0, 9);

  std::vector<SceneNode> leaves;
  for (int i = 0; i < shapes; ++i) {
    Material m{eps(rng), 1.0, coin(rng) < 3};
    const std::string id = "s" + std::to_string(i);
    if (coin(rng) == 0) {
      std::vector<Point3> v;
      const int count = 1 + coin(rng) % 4;
      for (int k = 0; k < count; ++k) v.push_back({pos(rng), pos(rng), pos(rng)});
      leaves.push_back(leaf(Shape::make_vertex_set(id, std::move(v), m)));
    } else {
      Point3 a{pos(rng), pos(rng), pos(rng)};
      Point3 b = a;
      for (std::size_t k = 0; k < 3; ++k) b[k] = std::min(extent, a[k] + size(rng));
      if (coin(rng) == 1) {
        const auto flat = static_cast<std::size_t>(coin(rng) % 3);
        b[flat] = a[flat];
      }
      leaves.push_back(leaf(Shape::make_box(id, a, b, m)));
    }
  }
  // Group consecutive leaves into compounds of random size, twice.
  for (int level = 0; level < 2; ++level) {
    std::vector<SceneNode> grouped;
    std::size_t i = 0;
    while (i < leaves.size()) {
      const std::size_t take = std::min<std::size_t>(leaves.size() - i, 1 + coin(rng) % 5);
      std::vector<SceneNode> kids(std::make_move_iterator(leaves.begin() + i),
                                  std::make_move_iterator(leaves.begin() + i + take));
      grouped.push_back(compound("g" + std::to_string(level) + "_" + std::to_string(i),
                                 std::move(kids)));
      i += take;
    }
    leaves = std::move(grouped);
  }
  return compound("root", std::move(leaves));
}

// Random tree of compounds and shapes up to `max_depth` deep.
inline SceneNode random_tree(std::mt19937_64& rng, int max_depth, int& next_id) {
  std::uniform_int_distribution<int> pick(0, 3);
  if (max_depth == 0 || pick(rng) == 0) {
    const double x = static_cast<double>(next_id);
    return leaf(Shape::make_box("s" + std::to_string(next_id++), {x, 0, 0}, {x + 0.5, 1, 1}));
  }
  std::vector<SceneNode> kids;
  const int n = pick(rng);
  for (int i = 0; i < n; ++i) kids.push_back(random_tree(rng, max_depth - 1, next_id));
  return compound("c", std::move(kids));
}

inline std::size_t count_leaves(const SceneNode& n) {
  if (n.is_leaf()) return 1;
  std::size_t c = 0;
  for (const auto& k : n.compound().children) c += count_leaves(k);
  return c;
}

// Mirror every coordinate of `axis` about zero.
inline SceneNode mirrored(const SceneNode& n, Axis axis) {
  const std::size_t i = index(axis);
  if (n.is_leaf()) {
    Shape s = n.shape();
    if (s.kind == ShapeKind::box) {
      Point3 a = s.box_min, b = s.box_max;
      a[i] = -a[i];
      b[i] = -b[i];
      return leaf(Shape::make_box(s.id, a, b, s.material));
    }
    for (auto& v : s.vertices) v[i] = -v[i];
    return leaf(s);
  }
  std::vector<SceneNode> kids;
  for (const auto& k : n.compound().children) kids.push_back(mirrored(k, axis));
  return compound(n.compound().name, std::move(kids));
}

struct MeshReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  std::string str() const {
    std::string s;
    for (const auto& f : failures) s += f + "\n";
    return s;
  }
};

// Checks every documented Grid invariant except symmetry and determinism,
// which need additional generate() calls (see check_symmetry below).
inline MeshReport check_grid(const SceneNode& root, const ExcitationSpec& exc,
                             const MeshParams& params, const Grid& grid) {
  MeshReport rep;
  auto fail = [&](Axis a, const std::string& what) {
    rep.failures.push_back(std::string(1, "XYZ"[index(a)]) + ": " + what);
  };
  const auto shapes = dfs_shapes(root);
  const BoundingBox bbox = scene_bbox(shapes);
  const double lmin = exc.c / exc.f_max;
  const double lmax = exc.c / exc.f_min;
  const double gap = lmin * lmax / (2 * (lmin + lmax));
  const double h_model = lmin / params.max_cell_model;
  const double h_space = lmin / params.max_cell_space;
  const double eps = lmin / params.min_cell_global;
  constexpr double rel = 1e-9;

  double dmin[3];
  for (Axis a : kAxes) {
    const auto& lines = grid.axis(a).lines;
    const std::size_t ai = index(a);
    const double lo = bbox.min[ai], hi = bbox.max[ai];
    if (lines.size() < 2) {
      fail(a, "fewer than two lines");
      continue;
    }
    for (std::size_t i = 1; i < lines.size(); ++i) {
      if (!(lines[i] > lines[i - 1])) fail(a, "not strictly increasing at " + std::to_string(i));
    }
    const auto anchors = axis_vertex_coords(shapes, a);
    for (double v : anchors) {
      if (!std::binary_search(lines.begin(), lines.end(), v)) {
        fail(a, "vertex coordinate missing: " + std::to_string(v));
      }
    }
    std::vector<double> prot = anchors;
    prot.push_back(lo - gap);
    prot.push_back(hi + gap);
    std::sort(prot.begin(), prot.end());
    auto is_prot = [&](double v) { return std::binary_search(prot.begin(), prot.end(), v); };

    const double edge_lo = lo - gap, edge_hi = hi + gap;
    const double tol = 1e-12 * (edge_hi - edge_lo);
    std::size_t pml_lo = 0, pml_hi = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const double x0 = lines[i - 1], x1 = lines[i], w = x1 - x0;
      if (w < eps * (1 - rel) && !(is_prot(x0) && is_prot(x1))) {
        fail(a, "cell below global floor at " + std::to_string(x0));
      }
      const bool in_model = lo == hi ? (x0 < lo && x1 > lo) : (x0 < hi && x1 > lo);
      if (in_model && w > h_model * (1 + rel)) {
        fail(a, "model cell above ceiling at " + std::to_string(x0));
      }
      const bool in_gap = !in_model && x0 >= edge_lo - tol && x1 <= edge_hi + tol;
      if (in_gap && w > h_space * (1 + rel)) {
        fail(a, "free-space cell above ceiling at " + std::to_string(x0));
      }
      if (x1 <= edge_lo + tol || x0 >= edge_hi - tol) {
        (x1 <= edge_lo + tol ? pml_lo : pml_hi)++;
        if (std::abs(w - h_space) > h_space * rel) fail(a, "PML cell is not lambda/max_cell_space");
      }
    }
    if (pml_lo != static_cast<std::size_t>(params.pml_n) ||
        pml_hi != static_cast<std::size_t>(params.pml_n)) {
      fail(a, "PML cell count " + std::to_string(pml_lo) + "/" + std::to_string(pml_hi));
    }
    const double span = (hi - lo) + 2 * (gap + params.pml_n * h_space);
    if (std::abs((lines.back() - lines.front()) - span) > 1e-12 * span) {
      fail(a, "domain extent differs from model + 2(gap + pml)");
    }

    // Grading inside isolated fans.
    const int n = params.n[ai];
    if (n > 0) {
      const double reach = h_model / params.grading_ratio;
      const auto sites = cluster_sites(anchors, lmin / params.res_fraction[ai], eps);
      for (double s : sites) {
        bool isolated = std::binary_search(anchors.begin(), anchors.end(), s);
        for (double p : prot) {
          if (p != s && std::abs(p - s) <= reach * (1 + rel)) isolated = false;
        }
        for (double t : sites) {
          if (t != s && std::abs(t - s) <= 2 * reach + eps) isolated = false;
        }
        if (!isolated) continue;
        std::vector<double> cells;
        for (std::size_t i = 1; i < lines.size(); ++i) {
          if (lines[i - 1] >= s - reach * (1 + rel) && lines[i] <= s + reach * (1 + rel)) {
            cells.push_back(lines[i] - lines[i - 1]);
          }
        }
        for (std::size_t i = 1; i < cells.size(); ++i) {
          const double r = std::max(cells[i], cells[i - 1]) / std::min(cells[i], cells[i - 1]);
          if (r > params.grading_ratio * (1 + rel)) {
            fail(a, "fan grading ratio " + std::to_string(r) + " at site " + std::to_string(s));
          }
        }
      }
    }
    dmin[ai] = grid.axis(a).min_cell();
  }
  if (rep.ok()) {
    const double dt = cfl_timestep(dmin[0], dmin[1], dmin[2], exc.c);
    if (dt != grid.dt_max) rep.failures.push_back("dt_max does not match recomputed CFL bound");
  }
  return rep;
}

inline bool same_grid(const Grid& a, const Grid& b) {
  return a.x.lines == b.x.lines && a.y.lines == b.y.lines && a.z.lines == b.z.lines &&
         a.dt_max == b.dt_max;
}

// Mirror about each axis plane and compare with the negated, reversed lines.
inline MeshReport check_symmetry(const SceneNode& root, const ExcitationSpec& exc,
                                 const MeshParams& params, const Grid& grid) {
  MeshReport rep;
  for (Axis a : kAxes) {
    const Grid m = generate(mirrored(root, a), exc, params);
    const auto& orig = grid.axis(a).lines;
    const auto& mir = m.axis(a).lines;
    if (orig.size() != mir.size()) {
      rep.failures.push_back(std::string(1, "XYZ"[index(a)]) + ": mirrored line count " +
                             std::to_string(mir.size()) + " vs " + std::to_string(orig.size()));
      continue;
    }
    const double scale = orig.back() - orig.front();
    for (std::size_t i = 0; i < orig.size(); ++i) {
      if (std::abs(orig[i] + mir[mir.size() - 1 - i]) > 1e-12 * scale) {
        rep.failures.push_back(std::string(1, "XYZ"[index(a)]) + ": mirrored line mismatch");
        break;
      }
    }
  }
  return rep;
}

// Extended-precision evaluation of the CFL bound.
inline double cfl_oracle(double dx, double dy, double dz, double c) {
  using big = boost::multiprecision::cpp_bin_float_50;
  const big x(dx), y(dy), z(dz), cc(c);
  const big s = 1 / (x * x) + 1 / (y * y) + 1 / (z * z);
  return static_cast<double>(1 / (cc * boost::multiprecision::sqrt(s)));
}

// max |sum g h e^{j phi}| over every assignment of `levels` uniform phases.
inline double brute_force_phase_grid(const std::vector<std::complex<double>>& g,
                                     const std::vector<std::complex<double>>& h, int levels) {
  const std::size_t n = g.size();
  std::vector<int> idx(n, 0);
  double best = 0.0;
  const double step = 2.0 * 3.14159265358979323846 / levels;
  while (true) {
    std::complex<double> k{0, 0};
    for (std::size_t i = 0; i < n; ++i) k += g[i] * h[i] * std::polar(1.0, step * idx[i]);
    best = std::max(best, std::abs(k));
    std::size_t pos = 0;
    while (pos < n && ++idx[pos] == levels) idx[pos++] = 0;
    if (pos == n) break;
  }
  return best;
}

}  // namespace rectimesh::testing
