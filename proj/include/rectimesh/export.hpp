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

#include <string>

#include "rectimesh/meshgen.hpp"
#include "rectimesh/scatter.hpp"

namespace rectimesh {

enum class GridFormat { json, text };

// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

// {"x_lines":[...],"y_lines":[...],"z_lines":[...],"dt_max":..,
//  "lambda_min":..,"cells":[nx,ny,nz,total]}
std::string grid_to_json(const Grid& grid);
// Blocks headed X, Y, Z with one coordinate per line.
std::string grid_to_text(const Grid& grid);
std::string export_grid(const Grid& grid, GridFormat format);

// "cells: NX×NY×NZ = TOTAL, dt_max = DT"
std::string grid_summary(const Grid& grid);

// "angle_deg intensity[ intensity_db]" rows, six decimals. dB values are
// floored at -300.
std::string pattern_to_text(const ScatterPattern& pattern, bool with_db);

}  // namespace rectimesh
