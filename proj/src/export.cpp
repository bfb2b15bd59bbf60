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

#include "rectimesh/export.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace rectimesh {

namespace {

constexpr double kDbFloor = -300.0;

void append_lines(std::string& out, const std::vector<double>& lines) {
  out += '[';
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i) out += ',';
    out += format_double(lines[i]);
  }
  out += ']';
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string grid_to_json(const Grid& grid) {
  const CellCounts c = cell_counts(grid);
  std::string out = "{\"x_lines\":";
  append_lines(out, grid.x.lines);
  out += ",\"y_lines\":";
  append_lines(out, grid.y.lines);
  out += ",\"z_lines\":";
  append_lines(out, grid.z.lines);
  out += ",\"dt_max\":" + format_double(grid.dt_max);
  out += ",\"lambda_min\":" + format_double(grid.lambda_min);
  out += ",\"cells\":[" + std::to_string(c.nx) + ',' + std::to_string(c.ny) + ',' +
         std::to_string(c.nz) + ',' + std::to_string(c.total) + "]}\n";
  return out;
}

std::string grid_to_text(const Grid& grid) {
  std::string out;
  for (Axis a : kAxes) {
    out += "XYZ"[index(a)];
    out += '\n';
    for (double v : grid.axis(a).lines) {
      out += format_double(v);
      out += '\n';
    }
  }
  return out;
}

std::string export_grid(const Grid& grid, GridFormat format) {
  return format == GridFormat::json ? grid_to_json(grid) : grid_to_text(grid);
}

std::string grid_summary(const Grid& grid) {
  const CellCounts c = cell_counts(grid);
  return "cells: " + std::to_string(c.nx) + "×" + std::to_string(c.ny) + "×" +
         std::to_string(c.nz) + " = " + std::to_string(c.total) +
         ", dt_max = " + format_double(grid.dt_max);
}

std::string pattern_to_text(const ScatterPattern& pattern, bool with_db) {
  std::string out;
  char buf[96];
  for (std::size_t i = 0; i < pattern.angles.size(); ++i) {
    const double deg = pattern.angles[i] * 180.0 / std::numbers::pi;
    const double v = pattern.values[i];
    int n;
    if (with_db) {
      const double db = v > 0.0 ? std::max(10.0 * std::log10(v), kDbFloor) : kDbFloor;
      n = std::snprintf(buf, sizeof buf, "%.6f %.6f %.6f\n", deg, v, db);
    } else {
      n = std::snprintf(buf, sizeof buf, "%.6f %.6f\n", deg, v);
    }
    out.append(buf, static_cast<std::size_t>(n));
  }
  return out;
}

}  // namespace rectimesh
