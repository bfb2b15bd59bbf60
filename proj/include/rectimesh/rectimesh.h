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

/* C interface to the rectimesh library.
 *
 * Objects are opaque handles created by *_parse / *_generate / *_create
 * functions and released with the matching *_free. Every fallible call
 * returns a rectimesh_status; on failure rectimesh_last_error() holds a
 * one-line description, valid until the next failing call on the same
 * thread. Strings returned through char** are owned by the caller and must
 * be released with rectimesh_string_free(). Angles are radians, lengths
 * meters, frequencies Hz.
 */
#ifndef RECTIMESH_RECTIMESH_H
#define RECTIMESH_RECTIMESH_H

#include <stddef.h>
#include <stdint.h>

#if defined(RECTIMESH_BUILDING_LIBRARY)
#define RECTIMESH_API __attribute__((visibility("default")))
#else
#define RECTIMESH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rectimesh_status {
  RECTIMESH_OK = 0,
  RECTIMESH_ERR_INVALID_ARGUMENT = 1,
  RECTIMESH_ERR_PARSE = 2,
  RECTIMESH_ERR_DUPLICATE_ID = 3,
  RECTIMESH_ERR_UNKNOWN_KIND = 4,
  RECTIMESH_ERR_DEGENERATE_SHAPE = 5,
  RECTIMESH_ERR_EMPTY_SCENE = 6,
  RECTIMESH_ERR_DC_EXCITATION = 7,
  RECTIMESH_ERR_OUT_OF_RANGE = 8,
  RECTIMESH_ERR_LENGTH_MISMATCH = 9,
  RECTIMESH_ERR_TOTAL_INTERNAL_REFLECTION = 10,
  RECTIMESH_ERR_TRUNCATED_LOBE = 11,
  RECTIMESH_ERR_IO = 12,
  RECTIMESH_ERR_INTERNAL = 99
} rectimesh_status;

typedef enum rectimesh_axis { RECTIMESH_AXIS_X = 0, RECTIMESH_AXIS_Y = 1, RECTIMESH_AXIS_Z = 2 } rectimesh_axis;

typedef enum rectimesh_grid_format {
  RECTIMESH_FORMAT_JSON = 0,
  RECTIMESH_FORMAT_TEXT = 1
} rectimesh_grid_format;

typedef struct rectimesh_scene rectimesh_scene;
typedef struct rectimesh_grid rectimesh_grid;
typedef struct rectimesh_pattern rectimesh_pattern;

typedef struct rectimesh_excitation {
  double f_min;
  double f_max;
  double c; /* 0 selects the vacuum speed of light */
} rectimesh_excitation;

typedef struct rectimesh_mesh_params {
  double max_cell_model;
  double max_cell_space;
  double min_cell_global;
  int n[3];
  double res_fraction[3];
  int pml_n;
  double grading_ratio;
  int serial; /* non-zero disables per-axis threads */
} rectimesh_mesh_params;

typedef struct rectimesh_grid_info {
  uint64_t nx, ny, nz, total;
  double dt_max;
  double lambda_min;
  double lambda_max;
  double lambda_mid_quarter;
} rectimesh_grid_info;

RECTIMESH_API const char* rectimesh_version(void);
RECTIMESH_API const char* rectimesh_last_error(void);
RECTIMESH_API const char* rectimesh_status_string(rectimesh_status status);
RECTIMESH_API void rectimesh_string_free(char* s);

/* scene */
RECTIMESH_API rectimesh_status rectimesh_scene_parse(const char* text, size_t length,
                                                     rectimesh_scene** out);
RECTIMESH_API rectimesh_status rectimesh_scene_load(const char* path, rectimesh_scene** out);
RECTIMESH_API void rectimesh_scene_free(rectimesh_scene* scene);
/* Shapes are indexed in depth-first order. */
RECTIMESH_API rectimesh_status rectimesh_scene_shape_count(const rectimesh_scene* scene,
                                                           size_t* out);
RECTIMESH_API rectimesh_status rectimesh_scene_shape_id(const rectimesh_scene* scene,
                                                        size_t index, const char** out);
RECTIMESH_API rectimesh_status rectimesh_scene_bbox(const rectimesh_scene* scene,
                                                    double min_out[3], double max_out[3]);

/* mesh generation */
RECTIMESH_API void rectimesh_mesh_params_default(rectimesh_mesh_params* params);
RECTIMESH_API rectimesh_status rectimesh_generate(const rectimesh_scene* scene,
                                                  const rectimesh_excitation* excitation,
                                                  const rectimesh_mesh_params* params,
                                                  rectimesh_grid** out);
RECTIMESH_API void rectimesh_grid_free(rectimesh_grid* grid);
/* The returned array stays valid for the lifetime of the grid. */
RECTIMESH_API rectimesh_status rectimesh_grid_lines(const rectimesh_grid* grid,
                                                    rectimesh_axis axis,
                                                    const double** lines, size_t* count);
RECTIMESH_API rectimesh_status rectimesh_grid_get_info(const rectimesh_grid* grid,
                                                       rectimesh_grid_info* out);
RECTIMESH_API size_t rectimesh_grid_warning_count(const rectimesh_grid* grid);
RECTIMESH_API const char* rectimesh_grid_warning(const rectimesh_grid* grid, size_t index);
RECTIMESH_API rectimesh_status rectimesh_grid_export(const rectimesh_grid* grid,
                                                     rectimesh_grid_format format,
                                                     char** out);
RECTIMESH_API rectimesh_status rectimesh_grid_summary(const rectimesh_grid* grid, char** out);

RECTIMESH_API rectimesh_status rectimesh_wavelengths(double f_min, double f_max, double c,
                                                     double* lambda_min, double* lambda_max);
RECTIMESH_API rectimesh_status rectimesh_boundary_gap(double lambda_min, double lambda_max,
                                                      double* out);
RECTIMESH_API rectimesh_status rectimesh_cfl_timestep(double dx_min, double dy_min,
                                                      double dz_min, double c, double* out);
RECTIMESH_API rectimesh_status rectimesh_cell_counts(uint64_t nx, uint64_t ny, uint64_t nz,
                                                     uint64_t* total);

/* link budget and RIS analysis; complex values are interleaved (re, im) */
RECTIMESH_API rectimesh_status rectimesh_received_power(double p_tx, const double* gains,
                                                        size_t n_gains, const double* losses,
                                                        size_t n_losses, double* out);
RECTIMESH_API rectimesh_status rectimesh_eirp(double p_tx, double l_tx, double g_tx,
                                              double* out);
RECTIMESH_API rectimesh_status rectimesh_fspl(double distance, double frequency, double c,
                                              double* out);
RECTIMESH_API rectimesh_status rectimesh_fspl_wavelength(double distance, double wavelength,
                                                         double* out);
RECTIMESH_API rectimesh_status rectimesh_snell_refraction(double theta_i, double n1, double n2,
                                                          double* out);
RECTIMESH_API rectimesh_status rectimesh_atom_channel_gain(double aperture, double distance,
                                                           double* out);
RECTIMESH_API rectimesh_status rectimesh_e2e_channel_gain(double aperture, double d_g,
                                                          double d_h, uint64_t atoms,
                                                          double* out);
RECTIMESH_API rectimesh_status rectimesh_composite_channel(const double* g, const double* h,
                                                           const double* phi, size_t atoms,
                                                           double out[2]);
RECTIMESH_API rectimesh_status rectimesh_optimal_phases(const double* g, const double* h,
                                                        size_t atoms, double* phi_out);
RECTIMESH_API rectimesh_status rectimesh_sidelobe_count(double p, int* out);
RECTIMESH_API rectimesh_status rectimesh_fem_sweep_points(double f0, double f1, double df,
                                                          int64_t* out);

/* RIS channel file: {"g":[[re,im],...],"h":[[re,im],...],"phi":[...]?} */
RECTIMESH_API rectimesh_status rectimesh_ris_report(const char* channels_json, size_t length,
                                                    char** out);
RECTIMESH_API rectimesh_status rectimesh_link_report(double p_tx, const double* gains,
                                                     size_t n_gains, const double* losses,
                                                     size_t n_losses, double l_tx, double g_tx,
                                                     double fspl_distance,
                                                     double fspl_frequency, char** out);

/* scattering */
RECTIMESH_API rectimesh_status rectimesh_pattern_create(double p, double lambda, double theta_i,
                                                        int samples, int use_quadrature,
                                                        rectimesh_pattern** out);
RECTIMESH_API void rectimesh_pattern_free(rectimesh_pattern* pattern);
RECTIMESH_API rectimesh_status rectimesh_pattern_samples(const rectimesh_pattern* pattern,
                                                         const double** angles,
                                                         const double** values, size_t* count);
RECTIMESH_API rectimesh_status rectimesh_pattern_peak(const rectimesh_pattern* pattern,
                                                      double* angle, double* intensity);
RECTIMESH_API rectimesh_status rectimesh_pattern_sidelobes(const rectimesh_pattern* pattern,
                                                           int* out);
RECTIMESH_API rectimesh_status rectimesh_pattern_hpbw(const rectimesh_pattern* pattern,
                                                      double* out);
RECTIMESH_API rectimesh_status rectimesh_pattern_export(const rectimesh_pattern* pattern,
                                                        int with_db, char** out);
RECTIMESH_API rectimesh_status rectimesh_pattern_report(const rectimesh_pattern* pattern,
                                                        char** out);
RECTIMESH_API rectimesh_status rectimesh_poynting(const double e[3], const double h[3],
                                                  double out[3]);
RECTIMESH_API rectimesh_status rectimesh_rcs_from_fields(double e_scattered, double e_incident,
                                                         double r, double* out);

#ifdef __cplusplus
}
#endif

#endif /* RECTIMESH_RECTIMESH_H */
