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

// Command-line front end. Everything numeric goes through the C API; this
// file only parses flags, moves bytes between files and the library, and
// converts degrees to radians at the boundary.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rectimesh/rectimesh.h"

namespace {

struct CliError {
  std::string message;
};

void check(rectimesh_status st) {
  if (st != RECTIMESH_OK) {
    throw CliError{std::string(rectimesh_status_string(st)) + ": " + rectimesh_last_error()};
  }
}

// Owns a char* handed out by the library.
struct LibString {
  char* p = nullptr;
  ~LibString() { rectimesh_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{"cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << data;
  if (!out) throw CliError{"cannot write '" + path + "'"};
}

double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

struct MeshArgs {
  std::string scene;
  double fmin = 0, fmax = 0;
  double max_cell_model = 0, max_cell_space = 0, min_cell_global = 0;
  std::vector<int> n{3, 3, 3};
  std::vector<double> res_fraction{6, 6, 6};
  int pml_n = 8;
  double grading_ratio = 2.0;
  std::string out;
  std::string format = "json";
  bool serial = false;
};

struct LinkArgs {
  double ptx = 0;
  std::vector<double> gains, losses;
  double ltx = 0, gtx = 0;
  double fspl_d = 0, fspl_f = 0;
};

struct ScatterArgs {
  double p = 0;
  double theta_i = 0;
  int samples = 3601;
  double freq = 30e9;
  std::string out;
  bool db = false;
  bool quadrature = false;
};

void run_mesh(const MeshArgs& a) {
  struct SceneGuard {
    rectimesh_scene* s = nullptr;
    ~SceneGuard() { rectimesh_scene_free(s); }
  } scene;
  struct GridGuard {
    rectimesh_grid* g = nullptr;
    ~GridGuard() { rectimesh_grid_free(g); }
  } grid;

  check(rectimesh_scene_load(a.scene.c_str(), &scene.s));
  rectimesh_mesh_params params;
  rectimesh_mesh_params_default(&params);
  params.max_cell_model = a.max_cell_model;
  params.max_cell_space = a.max_cell_space;
  params.min_cell_global = a.min_cell_global;
  for (int i = 0; i < 3; ++i) {
    params.n[i] = a.n[static_cast<std::size_t>(i)];
    params.res_fraction[i] = a.res_fraction[static_cast<std::size_t>(i)];
  }
  params.pml_n = a.pml_n;
  params.grading_ratio = a.grading_ratio;
  params.serial = a.serial ? 1 : 0;
  const rectimesh_excitation exc{a.fmin, a.fmax, 0.0};
  check(rectimesh_generate(scene.s, &exc, &params, &grid.g));

  for (std::size_t i = 0; i < rectimesh_grid_warning_count(grid.g); ++i) {
    std::cerr << "warning: " << rectimesh_grid_warning(grid.g, i) << '\n';
  }
  LibString data;
  check(rectimesh_grid_export(
      grid.g, a.format == "text" ? RECTIMESH_FORMAT_TEXT : RECTIMESH_FORMAT_JSON, &data.p));
  if (a.out.empty()) {
    std::cout << data.str();
  } else {
    write_file(a.out, data.str());
  }
  LibString summary;
  check(rectimesh_grid_summary(grid.g, &summary.p));
  std::cout << summary.str() << '\n';
}

void run_link(const LinkArgs& a) {
  LibString report;
  check(rectimesh_link_report(a.ptx, a.gains.data(), a.gains.size(), a.losses.data(),
                              a.losses.size(), a.ltx, a.gtx, a.fspl_d, a.fspl_f, &report.p));
  std::cout << report.str();
}

void run_ris(const std::string& path) {
  const std::string text = read_file(path);
  LibString report;
  check(rectimesh_ris_report(text.data(), text.size(), &report.p));
  std::cout << report.str();
}

void run_scatter(const ScatterArgs& a) {
  double lambda = 0, unused = 0;
  check(rectimesh_wavelengths(a.freq, a.freq, 0.0, &lambda, &unused));
  struct PatternGuard {
    rectimesh_pattern* p = nullptr;
    ~PatternGuard() { rectimesh_pattern_free(p); }
  } pattern;
  check(rectimesh_pattern_create(a.p, lambda, deg_to_rad(a.theta_i), a.samples,
                                 a.quadrature ? 1 : 0, &pattern.p));
  if (!a.out.empty()) {
    LibString data;
    check(rectimesh_pattern_export(pattern.p, a.db ? 1 : 0, &data.p));
    write_file(a.out, data.str());
  }
  LibString report;
  check(rectimesh_pattern_report(pattern.p, &report.p));
  std::cout << report.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-uniform rectilinear FDTD grids and companion RF analysis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", rectimesh_version());

  MeshArgs mesh;
  auto* mesh_cmd = app.add_subcommand("mesh", "Generate a rectilinear grid from a scene");
  mesh_cmd->add_option("--scene", mesh.scene, "Scene JSON file")->required();
  mesh_cmd->add_option("--fmin", mesh.fmin, "Lowest excitation frequency [Hz]")->required();
  mesh_cmd->add_option("--fmax", mesh.fmax, "Highest excitation frequency [Hz]")->required();
  mesh_cmd->add_option("--max-cell-model", mesh.max_cell_model,
                       "Model resolution as a fraction of lambda_min")->required();
  mesh_cmd->add_option("--max-cell-space", mesh.max_cell_space,
                       "Free-space resolution as a fraction of lambda_min")->required();
  mesh_cmd->add_option("--min-cell-global", mesh.min_cell_global,
                       "Smallest cell as a fraction of lambda_min")->required();
  mesh_cmd->add_option("--n", mesh.n, "Fan lines per side, NX,NY,NZ")
      ->delimiter(',')->expected(3);
  mesh_cmd->add_option("--res-fraction", mesh.res_fraction, "Clustering fractions FX,FY,FZ")
      ->delimiter(',')->expected(3);
  mesh_cmd->add_option("--pml-n", mesh.pml_n, "PML cells per side [4, 50]");
  mesh_cmd->add_option("--grading-ratio", mesh.grading_ratio, "Fan grading ratio (> 1)");
  mesh_cmd->add_option("--out", mesh.out, "Output file (stdout when omitted)");
  mesh_cmd->add_option("--format", mesh.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  mesh_cmd->add_flag("--serial", mesh.serial, "Process axes on one thread");

  LinkArgs link;
  auto* link_cmd = app.add_subcommand("linkbudget", "Evaluate a link budget");
  link_cmd->add_option("--ptx", link.ptx, "Transmit power [dBm]")->required();
  link_cmd->add_option("--gain", link.gains, "Gain term [dB], repeatable")
      ->allow_extra_args(false);
  link_cmd->add_option("--loss", link.losses, "Loss term [dB], repeatable")
      ->allow_extra_args(false);
  link_cmd->add_option("--ltx", link.ltx, "Transmitter loss [dB]");
  link_cmd->add_option("--gtx", link.gtx, "Transmit antenna gain [dBi]");
  auto* fd = link_cmd->add_option("--fspl-d", link.fspl_d, "Free-space distance [m]");
  auto* ff = link_cmd->add_option("--fspl-f", link.fspl_f, "Free-space frequency [Hz]");
  fd->needs(ff);
  ff->needs(fd);

  std::string channels;
  auto* ris_cmd = app.add_subcommand("ris-phase", "Optimal RIS phases for a channel set");
  ris_cmd->add_option("--channels", channels, "Channel JSON file")->required();

  ScatterArgs scatter;
  auto* scatter_cmd = app.add_subcommand("scatter", "Plate scattering pattern");
  scatter_cmd->add_option("--p", scatter.p, "Side length in wavelengths")->required();
  scatter_cmd->add_option("--theta-i", scatter.theta_i, "Incidence angle [deg]");
  scatter_cmd->add_option("--samples", scatter.samples, "Observation samples (>= 181)");
  scatter_cmd->add_option("--freq", scatter.freq, "Frequency [Hz]");
  scatter_cmd->add_option("--out", scatter.out, "Pattern output file");
  scatter_cmd->add_flag("--db", scatter.db, "Append a dB column");
  scatter_cmd->add_flag("--quadrature", scatter.quadrature, "Integrate numerically");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*mesh_cmd) run_mesh(mesh);
    else if (*link_cmd) run_link(link);
    else if (*ris_cmd) run_ris(channels);
    else if (*scatter_cmd) run_scatter(scatter);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return 1;
  }
  return 0;
}
