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

#include "rectimesh/rectimesh.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "rectimesh/analysis.hpp"
#include "rectimesh/error.hpp"
#include "rectimesh/export.hpp"
#include "rectimesh/meshgen.hpp"
#include "rectimesh/reports.hpp"
#include "rectimesh/scatter.hpp"
#include "rectimesh/scene.hpp"

struct rectimesh_scene {
  rectimesh::SceneNode root;
  std::vector<rectimesh::Shape> shapes;
};

struct rectimesh_grid {
  rectimesh::Grid grid;
};

struct rectimesh_pattern {
  rectimesh::ScatterPattern pattern;
  double p;
};

namespace {

using namespace rectimesh;

thread_local std::string g_last_error;

rectimesh_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return RECTIMESH_ERR_INVALID_ARGUMENT;
    case ErrorCode::parse_error: return RECTIMESH_ERR_PARSE;
    case ErrorCode::duplicate_id: return RECTIMESH_ERR_DUPLICATE_ID;
    case ErrorCode::unknown_kind: return RECTIMESH_ERR_UNKNOWN_KIND;
    case ErrorCode::degenerate_shape: return RECTIMESH_ERR_DEGENERATE_SHAPE;
    case ErrorCode::empty_scene: return RECTIMESH_ERR_EMPTY_SCENE;
    case ErrorCode::dc_excitation: return RECTIMESH_ERR_DC_EXCITATION;
    case ErrorCode::out_of_range: return RECTIMESH_ERR_OUT_OF_RANGE;
    case ErrorCode::length_mismatch: return RECTIMESH_ERR_LENGTH_MISMATCH;
    case ErrorCode::total_internal_reflection: return RECTIMESH_ERR_TOTAL_INTERNAL_REFLECTION;
    case ErrorCode::truncated_lobe: return RECTIMESH_ERR_TRUNCATED_LOBE;
    case ErrorCode::io_error: return RECTIMESH_ERR_IO;
  }
  return RECTIMESH_ERR_INTERNAL;
}

rectimesh_status fail(rectimesh_status status, std::string msg) {
  g_last_error = std::move(msg);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
rectimesh_status guarded(F&& body) {
  try {
    body();
    return RECTIMESH_OK;
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RECTIMESH_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RECTIMESH_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RECTIMESH_ERR_INTERNAL, "unknown error");
  }
}

#define REQUIRE_ARG(cond)                                                       \
  do {                                                                          \
    if (!(cond)) return fail(RECTIMESH_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<cplx> complex_span(const double* interleaved, size_t n) {
  std::vector<cplx> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = {interleaved[2 * i], interleaved[2 * i + 1]};
  return out;
}

MeshParams to_params(const rectimesh_mesh_params& p) {
  MeshParams m;
  m.max_cell_model = p.max_cell_model;
  m.max_cell_space = p.max_cell_space;
  m.min_cell_global = p.min_cell_global;
  for (int i = 0; i < 3; ++i) {
    m.n[i] = p.n[i];
    m.res_fraction[i] = p.res_fraction[i];
  }
  m.pml_n = p.pml_n;
  m.grading_ratio = p.grading_ratio;
  return m;
}

void make_scene(SceneNode root, rectimesh_scene** out) {
  auto s = std::make_unique<rectimesh_scene>(rectimesh_scene{std::move(root), {}});
  s->shapes = dfs_shapes(s->root);
  *out = s.release();
}

}  // namespace

extern "C" {

const char* rectimesh_version(void) { return "0.1.0"; }

const char* rectimesh_last_error(void) { return g_last_error.c_str(); }

const char* rectimesh_status_string(rectimesh_status status) {
  switch (status) {
    case RECTIMESH_OK: return "ok";
    case RECTIMESH_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RECTIMESH_ERR_PARSE: return "parse error";
    case RECTIMESH_ERR_DUPLICATE_ID: return "duplicate shape id";
    case RECTIMESH_ERR_UNKNOWN_KIND: return "unknown shape kind";
    case RECTIMESH_ERR_DEGENERATE_SHAPE: return "degenerate shape";
    case RECTIMESH_ERR_EMPTY_SCENE: return "empty scene";
    case RECTIMESH_ERR_DC_EXCITATION: return "DC excitation";
    case RECTIMESH_ERR_OUT_OF_RANGE: return "out of range";
    case RECTIMESH_ERR_LENGTH_MISMATCH: return "length mismatch";
    case RECTIMESH_ERR_TOTAL_INTERNAL_REFLECTION: return "total internal reflection";
    case RECTIMESH_ERR_TRUNCATED_LOBE: return "truncated main lobe";
    case RECTIMESH_ERR_IO: return "i/o error";
    case RECTIMESH_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void rectimesh_string_free(char* s) { std::free(s); }

rectimesh_status rectimesh_scene_parse(const char* text, size_t length, rectimesh_scene** out) {
  REQUIRE_ARG(text);
  REQUIRE_ARG(out);
  *out = nullptr;
  return guarded([&] { make_scene(parse_scene(std::string_view(text, length)), out); });
}

rectimesh_status rectimesh_scene_load(const char* path, rectimesh_scene** out) {
  REQUIRE_ARG(path);
  REQUIRE_ARG(out);
  *out = nullptr;
  return guarded([&] { make_scene(load_scene(path), out); });
}

void rectimesh_scene_free(rectimesh_scene* scene) { delete scene; }

rectimesh_status rectimesh_scene_shape_count(const rectimesh_scene* scene, size_t* out) {
  REQUIRE_ARG(scene);
  REQUIRE_ARG(out);
  *out = scene->shapes.size();
  return RECTIMESH_OK;
}

rectimesh_status rectimesh_scene_shape_id(const rectimesh_scene* scene, size_t index,
                                          const char** out) {
  REQUIRE_ARG(scene);
  REQUIRE_ARG(out);
  if (index >= scene->shapes.size()) return fail(RECTIMESH_ERR_OUT_OF_RANGE, "shape index");
  *out = scene->shapes[index].id.c_str();
  return RECTIMESH_OK;
}

rectimesh_status rectimesh_scene_bbox(const rectimesh_scene* scene, double min_out[3],
                                      double max_out[3]) {
  REQUIRE_ARG(scene);
  REQUIRE_ARG(min_out);
  REQUIRE_ARG(max_out);
  return guarded([&] {
    const BoundingBox b = scene_bbox(scene->shapes);
    for (int i = 0; i < 3; ++i) {
      min_out[i] = b.min[i];
      max_out[i] = b.max[i];
    }
  });
}

void rectimesh_mesh_params_default(rectimesh_mesh_params* params) {
  if (!params) return;
  const MeshParams d;
  params->max_cell_model = d.max_cell_model;
  params->max_cell_space = d.max_cell_space;
  params->min_cell_global = d.min_cell_global;
  for (int i = 0; i < 3; ++i) {
    params->n[i] = d.n[i];
    params->res_fraction[i] = d.res_fraction[i];
  }
  params->pml_n = d.pml_n;
  params->grading_ratio = d.grading_ratio;
  params->serial = 0;
}

rectimesh_status rectimesh_generate(const rectimesh_scene* scene,
                                    const rectimesh_excitation* excitation,
                                    const rectimesh_mesh_params* params, rectimesh_grid** out) {
  REQUIRE_ARG(scene);
  REQUIRE_ARG(excitation);
  REQUIRE_ARG(params);
  REQUIRE_ARG(out);
  *out = nullptr;
  return guarded([&] {
    ExcitationSpec exc{excitation->f_min, excitation->f_max,
                       excitation->c == 0.0 ? kSpeedOfLight : excitation->c};
    Grid g = generate(scene->root, exc, to_params(*params),
                      params->serial ? Execution::serial : Execution::concurrent);
    *out = new rectimesh_grid{std::move(g)};
  });
}

void rectimesh_grid_free(rectimesh_grid* grid) { delete grid; }

rectimesh_status rectimesh_grid_lines(const rectimesh_grid* grid, rectimesh_axis axis,
                                      const double** lines, size_t* count) {
  REQUIRE_ARG(grid);
  REQUIRE_ARG(lines);
  REQUIRE_ARG(count);
  if (axis < RECTIMESH_AXIS_X || axis > RECTIMESH_AXIS_Z) {
    return fail(RECTIMESH_ERR_INVALID_ARGUMENT, "axis must be X, Y or Z");
  }
  const auto& v = grid->grid.axis(static_cast<Axis>(axis)).lines;
  *lines = v.data();
  *count = v.size();
  return RECTIMESH_OK;
}

rectimesh_status rectimesh_grid_get_info(const rectimesh_grid* grid, rectimesh_grid_info* out) {
  REQUIRE_ARG(grid);
  REQUIRE_ARG(out);
  return guarded([&] {
    const CellCounts c = cell_counts(grid->grid);
    *out = {c.nx,
            c.ny,
            c.nz,
            c.total,
            grid->grid.dt_max,
            grid->grid.lambda_min,
            grid->grid.lambda_max,
            grid->grid.lambda_mid_quarter};
  });
}

size_t rectimesh_grid_warning_count(const rectimesh_grid* grid) {
  return grid ? grid->grid.warnings.size() : 0;
}

const char* rectimesh_grid_warning(const rectimesh_grid* grid, size_t index) {
  if (!grid || index >= grid->grid.warnings.size()) return nullptr;
  return grid->grid.warnings[index].c_str();
}

rectimesh_status rectimesh_grid_export(const rectimesh_grid* grid, rectimesh_grid_format format,
                                       char** out) {
  REQUIRE_ARG(grid);
  REQUIRE_ARG(out);
  if (format != RECTIMESH_FORMAT_JSON && format != RECTIMESH_FORMAT_TEXT) {
    return fail(RECTIMESH_ERR_INVALID_ARGUMENT, "unknown grid format");
  }
  return guarded([&] {
    *out = duplicate(export_grid(
        grid->grid, format == RECTIMESH_FORMAT_JSON ? GridFormat::json : GridFormat::text));
  });
}

rectimesh_status rectimesh_grid_summary(const rectimesh_grid* grid, char** out) {
  REQUIRE_ARG(grid);
  REQUIRE_ARG(out);
  return guarded([&] { *out = duplicate(grid_summary(grid->grid)); });
}

rectimesh_status rectimesh_wavelengths(double f_min, double f_max, double c, double* lambda_min,
                                       double* lambda_max) {
  REQUIRE_ARG(lambda_min);
  REQUIRE_ARG(lambda_max);
  return guarded([&] {
    const Wavelengths w = wavelengths({f_min, f_max, c == 0.0 ? kSpeedOfLight : c});
    *lambda_min = w.min;
    *lambda_max = w.max;
  });
}

rectimesh_status rectimesh_boundary_gap(double lambda_min, double lambda_max, double* out) {
  REQUIRE_ARG(out);
  return guarded([&] { *out = boundary_gap(lambda_min, lambda_max); });
}

rectimesh_status rectimesh_cfl_timestep(double dx_min, double dy_min, double dz_min, double c,
                                        double* out) {
  REQUIRE_ARG(out);
  return guarded([&] {
    *out = cfl_timestep(dx_min, dy_min, dz_min, c == 0.0 ? kSpeedOfLight : c);
  });
}

rectimesh_status rectimesh_cell_counts(uint64_t nx, uint64_t ny, uint64_t nz, uint64_t* total) {
  REQUIRE_ARG(total);
  return guarded([&] { *total = make_cell_counts(nx, ny, nz).total; });
}

rectimesh_status rectimesh_received_power(double p_tx, const double* gains, size_t n_gains,
                                          const double* losses, size_t n_losses, double* out) {
  REQUIRE_ARG(out);
  REQUIRE_ARG(gains || n_gains == 0);
  REQUIRE_ARG(losses || n_losses == 0);
  return guarded([&] {
    LinkBudget b;
    b.p_tx = p_tx;
    for (size_t i = 0; i < n_gains; ++i) b.gains.push_back({"gain", gains[i]});
    for (size_t i = 0; i < n_losses; ++i) b.losses.push_back({"loss", losses[i]});
    *out = received_power(b);
  });
}

rectimesh_status rectimesh_eirp(double p_tx, double l_tx, double g_tx, double* out) {
  REQUIRE_ARG(out);
  *out = eirp(p_tx, l_tx, g_tx);
  return RECTIMESH_OK;
}

rectimesh_status rectimesh_fspl(double distance, double frequency, double c, double* out) {
  REQUIRE_ARG(out);
  return guarded([&] { *out = fspl(distance, frequency, c == 0.0 ? kSpeedOfLight : c); });
}

rectimesh_status rectimesh_fspl_wavelength(double distance, double wavelength, double* out) {
  REQUIRE_ARG(out);
  return guarded([&] { *out = fspl_wavelength(distance, wavelength); });
}

rectimesh_status rectimesh_snell_refraction(double theta_i, double n1, double n2, double* out) {
  REQUIRE_ARG(out);
  return guarded([&] { *out = snell_refraction(theta_i, n1, n2); });
}

rectimesh_status rectimesh_atom_channel_gain(double aperture, double distance, double* out) {
  REQUIRE_ARG(out);
  return guarded([&] { *out = atom_channel_gain(aperture, distance); });
}

rectimesh_status rectimesh_e2e_channel_gain(double aperture, double d_g, double d_h,
                                            uint64_t atoms, double* out) {
  REQUIRE_ARG(out);
  return guarded([&] { *out = e2e_channel_gain(aperture, d_g, d_h, atoms); });
}

rectimesh_status rectimesh_composite_channel(const double* g, const double* h, const double* phi,
                                             size_t atoms, double out[2]) {
  REQUIRE_ARG(out);
  REQUIRE_ARG((g && h && phi) || atoms == 0);
  return guarded([&] {
    const cplx k = composite_channel(complex_span(g, atoms), complex_span(h, atoms),
                                     std::span<const double>(phi, atoms));
    out[0] = k.real();
    out[1] = k.imag();
  });
}

rectimesh_status rectimesh_optimal_phases(const double* g, const double* h, size_t atoms,
                                          double* phi_out) {
  REQUIRE_ARG((g && h && phi_out) || atoms == 0);
  return guarded([&] {
    const auto phi = optimal_phases(complex_span(g, atoms), complex_span(h, atoms));
    std::copy(phi.begin(), phi.end(), phi_out);
  });
}

rectimesh_status rectimesh_sidelobe_count(double p, int* out) {
  REQUIRE_ARG(out);
  return guarded([&] { *out = sidelobe_count(p); });
}

rectimesh_status rectimesh_fem_sweep_points(double f0, double f1, double df, int64_t* out) {
  REQUIRE_ARG(out);
  return guarded([&] { *out = fem_sweep_points(f0, f1, df); });
}

rectimesh_status rectimesh_ris_report(const char* channels_json, size_t length, char** out) {
  REQUIRE_ARG(channels_json);
  REQUIRE_ARG(out);
  return guarded([&] {
    *out = duplicate(ris_report(parse_ris_channels(std::string_view(channels_json, length))));
  });
}

rectimesh_status rectimesh_link_report(double p_tx, const double* gains, size_t n_gains,
                                       const double* losses, size_t n_losses, double l_tx,
                                       double g_tx, double fspl_distance, double fspl_frequency,
                                       char** out) {
  REQUIRE_ARG(out);
  REQUIRE_ARG(gains || n_gains == 0);
  REQUIRE_ARG(losses || n_losses == 0);
  return guarded([&] {
    LinkRequest req;
    req.p_tx = p_tx;
    req.gains.assign(gains, gains + n_gains);
    req.losses.assign(losses, losses + n_losses);
    req.l_tx = l_tx;
    req.g_tx = g_tx;
    if (fspl_distance != 0.0 || fspl_frequency != 0.0) {
      req.fspl = FsplLeg{fspl_distance, fspl_frequency};
    }
    *out = duplicate(link_report(req));
  });
}

rectimesh_status rectimesh_pattern_create(double p, double lambda, double theta_i, int samples,
                                          int use_quadrature, rectimesh_pattern** out) {
  REQUIRE_ARG(out);
  *out = nullptr;
  return guarded([&] {
    ScatterPattern pat = po_pattern(
        {p, lambda, theta_i}, samples,
        use_quadrature ? PatternMethod::quadrature : PatternMethod::closed_form);
    *out = new rectimesh_pattern{std::move(pat), p};
  });
}

void rectimesh_pattern_free(rectimesh_pattern* pattern) { delete pattern; }

rectimesh_status rectimesh_pattern_samples(const rectimesh_pattern* pattern,
                                           const double** angles, const double** values,
                                           size_t* count) {
  REQUIRE_ARG(pattern);
  REQUIRE_ARG(angles);
  REQUIRE_ARG(values);
  REQUIRE_ARG(count);
  *angles = pattern->pattern.angles.data();
  *values = pattern->pattern.values.data();
  *count = pattern->pattern.angles.size();
  return RECTIMESH_OK;
}

rectimesh_status rectimesh_pattern_peak(const rectimesh_pattern* pattern, double* angle,
                                        double* intensity) {
  REQUIRE_ARG(pattern);
  REQUIRE_ARG(angle);
  REQUIRE_ARG(intensity);
  return guarded([&] {
    *angle = peak_angle(pattern->pattern);
    *intensity = pattern->pattern.peak_intensity;
  });
}

rectimesh_status rectimesh_pattern_sidelobes(const rectimesh_pattern* pattern, int* out) {
  REQUIRE_ARG(pattern);
  REQUIRE_ARG(out);
  return guarded([&] { *out = count_sidelobes(pattern->pattern); });
}

rectimesh_status rectimesh_pattern_hpbw(const rectimesh_pattern* pattern, double* out) {
  REQUIRE_ARG(pattern);
  REQUIRE_ARG(out);
  return guarded([&] { *out = hpbw(pattern->pattern); });
}

rectimesh_status rectimesh_pattern_export(const rectimesh_pattern* pattern, int with_db,
                                          char** out) {
  REQUIRE_ARG(pattern);
  REQUIRE_ARG(out);
  return guarded([&] { *out = duplicate(pattern_to_text(pattern->pattern, with_db != 0)); });
}

rectimesh_status rectimesh_pattern_report(const rectimesh_pattern* pattern, char** out) {
  REQUIRE_ARG(pattern);
  REQUIRE_ARG(out);
  return guarded([&] { *out = duplicate(pattern_report(pattern->pattern, pattern->p)); });
}

rectimesh_status rectimesh_poynting(const double e[3], const double h[3], double out[3]) {
  REQUIRE_ARG(e);
  REQUIRE_ARG(h);
  REQUIRE_ARG(out);
  const Vec3 s = poynting({e[0], e[1], e[2]}, {h[0], h[1], h[2]});
  for (int i = 0; i < 3; ++i) out[i] = s[i];
  return RECTIMESH_OK;
}

rectimesh_status rectimesh_rcs_from_fields(double e_scattered, double e_incident, double r,
                                           double* out) {
  REQUIRE_ARG(out);
  return guarded([&] { *out = rcs_from_fields(e_scattered, e_incident, r); });
}

}  // extern "C"
