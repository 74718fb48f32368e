// Copyright 2026 The cventlab Authors
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

/* C interface to the cventlab numerical core.
 *
 * Every function returns a cvl_status. Results are written through
 * out-parameters, which are left untouched on failure. After a failure,
 * cvl_last_error_message() describes the problem for the calling thread.
 *
 * Complex numbers are passed as (re, im) pairs. Quadrature vectors and
 * covariance matrices use the ordering (x1, y1, x2, y2), with
 * x = (a + a^dag)/2 so that the vacuum variance is 1/4; matrices are
 * row-major 4x4 arrays.
 */

#ifndef CVENTLAB_CVENTLAB_H_
#define CVENTLAB_CVENTLAB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(CVENTLAB_BUILDING_LIBRARY)
#define CVENTLAB_API __declspec(dllexport)
#else
#define CVENTLAB_API __declspec(dllimport)
#endif
#else
#define CVENTLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cvl_status {
  CVL_OK = 0,
  CVL_ERR_DOMAIN = 1,             /* argument outside the mathematical domain */
  CVL_ERR_INVALID_ARGUMENT = 2,   /* bad mode, empty input, shape mismatch */
  CVL_ERR_UNSUPPORTED_STATE = 3,  /* state outside the twin-beam family */
  CVL_ERR_TRUNCATION = 4,         /* Fock cutoff too small; see cvl_last_suggested_cutoff */
  CVL_ERR_NULL_POINTER = 5,
  CVL_ERR_BUFFER_TOO_SMALL = 6,
  CVL_ERR_INTERNAL = 7
} cvl_status;

typedef enum cvl_twin_beam_input {
  CVL_TWIN_BEAM_SQUEEZING = 0, /* r0 */
  CVL_TWIN_BEAM_SCHMIDT = 1,   /* x = tanh r0 */
  CVL_TWIN_BEAM_PHOTONS = 2    /* N = 2 sinh^2 r0 */
} cvl_twin_beam_input;

/* Mode selectors for noise; displacements accept 1 or 2 only. */
enum { CVL_MODE_FIRST = 1, CVL_MODE_SECOND = 2, CVL_MODE_BOTH = 3 };

typedef struct cvl_gaussian_state cvl_gaussian_state;
typedef struct cvl_fock_state cvl_fock_state;
typedef struct cvl_polygon cvl_polygon;

CVENTLAB_API const char* cvl_version(void);
CVENTLAB_API const char* cvl_status_string(cvl_status status);
CVENTLAB_API const char* cvl_last_error_message(void);
/* Cutoff suggested by the most recent CVL_ERR_TRUNCATION on this thread, or -1. */
CVENTLAB_API int cvl_last_suggested_cutoff(void);

/* ---- Gaussian states ---------------------------------------------------- */

CVENTLAB_API cvl_status cvl_twin_beam_params(cvl_twin_beam_input kind, double value,
                                             double* r0, double* x, double* photons);

CVENTLAB_API cvl_status cvl_gaussian_create(const double mean[4], const double cov[16],
                                            cvl_gaussian_state** out);
CVENTLAB_API cvl_status cvl_gaussian_vacuum(cvl_gaussian_state** out);
CVENTLAB_API cvl_status cvl_gaussian_twin_beam(cvl_twin_beam_input kind, double value,
                                               cvl_gaussian_state** out);
CVENTLAB_API cvl_status cvl_gaussian_twin_beam_family(double sigma_plus_sq, double sigma_minus_sq,
                                                      cvl_gaussian_state** out);
CVENTLAB_API void cvl_gaussian_free(cvl_gaussian_state* state);

CVENTLAB_API cvl_status cvl_gaussian_moments(const cvl_gaussian_state* state, double mean[4],
                                             double cov[16]);
CVENTLAB_API cvl_status cvl_gaussian_displace(const cvl_gaussian_state* state, double alpha_re,
                                              double alpha_im, int mode,
                                              cvl_gaussian_state** out);
CVENTLAB_API cvl_status cvl_gaussian_add_noise(const cvl_gaussian_state* state, double nbar,
                                               int modes, cvl_gaussian_state** out);

CVENTLAB_API cvl_status cvl_twin_beam_heterodyne_variance(double x, double* out);
CVENTLAB_API cvl_status cvl_gaussian_heterodyne_statistics(const cvl_gaussian_state* state,
                                                           double* mean_re, double* mean_im,
                                                           double* variance);
CVENTLAB_API cvl_status cvl_gaussian_heterodyne_pdf(const cvl_gaussian_state* state, double z_re,
                                                    double z_im, double* out);
/* Writes n_samples outcomes as interleaved (re, im) pairs: out has 2 * n_samples slots. */
CVENTLAB_API cvl_status cvl_gaussian_sample_heterodyne(const cvl_gaussian_state* state,
                                                       size_t n_samples, uint64_t seed,
                                                       double* out);
CVENTLAB_API cvl_status cvl_symplectic_eigenvalues(const double cov[16], double* nu_minus,
                                                   double* nu_plus);
CVENTLAB_API cvl_status cvl_gaussian_ppt(const cvl_gaussian_state* state, int* separable,
                                         double* witness);

/* ---- Truncated Fock space ----------------------------------------------- */

CVENTLAB_API cvl_status cvl_fock_twin_beam_tail(double x, int d_max, double* out);
CVENTLAB_API cvl_status cvl_fock_default_cutoff(double x, double tail_tolerance, int* out);
CVENTLAB_API cvl_status cvl_fock_twin_beam(double x, int d_max, cvl_fock_state** out);
CVENTLAB_API void cvl_fock_free(cvl_fock_state* state);

CVENTLAB_API cvl_status cvl_fock_max_photons(const cvl_fock_state* state, int* out);
CVENTLAB_API cvl_status cvl_fock_truncation_tail(const cvl_fock_state* state, double* out);
CVENTLAB_API cvl_status cvl_fock_norm_squared(const cvl_fock_state* state, double* out);
CVENTLAB_API cvl_status cvl_fock_amplitude(const cvl_fock_state* state, int p, int q,
                                           double* re, double* im);
CVENTLAB_API cvl_status cvl_fock_jx_evolve(const cvl_fock_state* state, double phi,
                                           cvl_fock_state** out);
CVENTLAB_API cvl_status cvl_fock_displace(const cvl_fock_state* state, double beta_re,
                                          double beta_im, int mode, cvl_fock_state** out);
CVENTLAB_API cvl_status cvl_fock_overlap(const cvl_fock_state* a, const cvl_fock_state* b,
                                         double* re, double* im);
CVENTLAB_API cvl_status cvl_fock_zero_difference_probability(const cvl_fock_state* state,
                                                             double* out);
CVENTLAB_API cvl_status cvl_fock_nonzero_difference_probability(const cvl_fock_state* state,
                                                                double* out);
CVENTLAB_API cvl_status cvl_fock_quadrature_means(const cvl_fock_state* state, double out[4]);

/* ---- Displacement estimation -------------------------------------------- */

typedef struct cvl_estimation_setting {
  double x;
  double nbar_total;
  double alpha_re;
  double alpha_im;
} cvl_estimation_setting;

CVENTLAB_API cvl_status cvl_conditional_variance(const cvl_estimation_setting* setting,
                                                 double* entangled, double* unentangled);
CVENTLAB_API cvl_status cvl_entanglement_convenient(const cvl_estimation_setting* setting,
                                                    int* out);
CVENTLAB_API cvl_status cvl_convenience_threshold(double x, double* out);
CVENTLAB_API cvl_status cvl_simulate_estimation(const cvl_estimation_setting* setting,
                                                size_t n_trials, uint64_t seed,
                                                double* rms_entangled, double* rms_unentangled);

/* ---- Unitary discrimination --------------------------------------------- */

/* Builds the polygon of the eigenphases of U2^dag U1. */
CVENTLAB_API cvl_status cvl_polygon_create(const double* phases, size_t n_phases,
                                           cvl_polygon** out);
CVENTLAB_API void cvl_polygon_free(cvl_polygon* polygon);

CVENTLAB_API cvl_status cvl_polygon_size(const cvl_polygon* polygon, size_t* out);
/* Copies the sorted, deduplicated phases; capacity must be >= cvl_polygon_size. */
CVENTLAB_API cvl_status cvl_polygon_phases(const cvl_polygon* polygon, double* out,
                                           size_t capacity);
CVENTLAB_API cvl_status cvl_polygon_distance(const cvl_polygon* polygon, double* out);
CVENTLAB_API cvl_status cvl_polygon_spread(const cvl_polygon* polygon, double* out);
CVENTLAB_API cvl_status cvl_polygon_min_error_probability(const cvl_polygon* polygon,
                                                          double* out);
CVENTLAB_API cvl_status cvl_polygon_probe_weights(const cvl_polygon* polygon, double* out,
                                                  size_t capacity);
CVENTLAB_API cvl_status cvl_polygon_single_copy_gain(const cvl_polygon* polygon,
                                                     size_t ancilla_dim, double* distance_plain,
                                                     double* distance_extended, int* equal);
/* bounded is 0 (and out untouched) when the spread is zero. */
CVENTLAB_API cvl_status cvl_polygon_copies_for_exact(const cvl_polygon* polygon, int* bounded,
                                                     size_t* out);
CVENTLAB_API cvl_status cvl_polygon_tensor_power(const cvl_polygon* polygon, size_t copies,
                                                 cvl_polygon** out);
CVENTLAB_API cvl_status cvl_polygon_sampled_min_overlap(const cvl_polygon* polygon,
                                                        size_t samples, uint64_t seed,
                                                        double* out);
CVENTLAB_API cvl_status cvl_spread_error_probability(double spread, double* out);

/* ---- Interferometry ----------------------------------------------------- */

CVENTLAB_API cvl_status cvl_np_detection_probability(double q0, double kappa_sq, double* out);
CVENTLAB_API cvl_status cvl_twin_beam_overlap_sq(double photons, double phi, double* out);
CVENTLAB_API cvl_status cvl_false_alarm_penalty(double q0, double gamma_star, double* out);
CVENTLAB_API cvl_status cvl_acceptance_probability(double prior, double gamma_star,
                                                   double* out);
CVENTLAB_API cvl_status cvl_min_detectable_phase_ideal(double q0, double gamma_star,
                                                       double photons, int* detectable,
                                                       double* phi_min, double* lambda,
                                                       double* asymptotic);
/* d_max < 0 selects the cutoff from x and tail_tolerance. */
CVENTLAB_API cvl_status cvl_mz_zero_count_probability(double x, double phi, int d_max,
                                                      double tail_tolerance, double* out);
CVENTLAB_API cvl_status cvl_mz_detection_probability(double x, double phi, int d_max,
                                                     double tail_tolerance, double* out);
CVENTLAB_API cvl_status cvl_mz_min_phase(double target_q_phi, double photons, double* out);
CVENTLAB_API cvl_status cvl_mz_invert_phase(double x, double target_q_phi, int d_max,
                                            int* found, double* phi);

/* ---- Key distribution --------------------------------------------------- */

typedef struct cvl_protocol_config {
  double x;
  double a;
  double kappa_key;
  double nbar;
} cvl_protocol_config;

CVENTLAB_API cvl_status cvl_bob_ideal_error(double x, double z0_re, double z0_im, double z1_re,
                                            double z1_im, double* out);
CVENTLAB_API cvl_status cvl_bob_ideal_error_asymptote(double x, double z0_re, double z0_im,
                                                      double z1_re, double z1_im, double* out);
CVENTLAB_API cvl_status cvl_coherent_error(double a0_re, double a0_im, double a1_re,
                                           double a1_im, double* out);
CVENTLAB_API cvl_status cvl_eve_error_uniform(double* out);
/* Negative cutoffs are chosen automatically. */
CVENTLAB_API cvl_status cvl_eve_uniform_key_residual(double x, double a, double radius,
                                                     double step, int mode1_cutoff,
                                                     int mode2_cutoff, double* out);
CVENTLAB_API cvl_status cvl_eve_error_gaussian_key(double a, double kappa_key, double* out);
CVENTLAB_API cvl_status cvl_eve_error_gaussian_key_asymptote(double a, double kappa_key,
                                                             double* out);
CVENTLAB_API cvl_status cvl_positive_eigenvalue_sum(double a, double kappa_key, double* out);
CVENTLAB_API cvl_status cvl_receiver_variance(double x, double* out);
CVENTLAB_API cvl_status cvl_quoted_receiver_variance(double x, double* out);
CVENTLAB_API cvl_status cvl_bob_heterodyne_error(double x, double a, double nbar, double* out);
CVENTLAB_API cvl_status cvl_eve_heterodyne_error(double x, double a, double kappa_key,
                                                 double nbar, double* out);
CVENTLAB_API cvl_status cvl_security_margin(double x, double kappa_key, double a, int* secure,
                                            double* bob_error, double* eve_error);
CVENTLAB_API cvl_status cvl_alphabet_pdfs(double z0_re, double z0_im, double x,
                                          double kappa_key, double z_re, double z_im,
                                          double* bob_pdf, double* eve_pdf);
CVENTLAB_API cvl_status cvl_simulate_binary_protocol(const cvl_protocol_config* config,
                                                     uint64_t n_bits, uint64_t seed,
                                                     uint64_t* bob_errors, uint64_t* eve_errors);

/* ---- Fiber propagation -------------------------------------------------- */

CVENTLAB_API cvl_status cvl_fiber_rescaled_time(double damping, double thermal_photons, double t,
                                                double* tau);
CVENTLAB_API cvl_status cvl_fiber_physical_time(double damping, double thermal_photons,
                                                double tau, double* t);
CVENTLAB_API cvl_status cvl_fiber_evolve_variances(double r0, double thermal_photons, double tau,
                                                   double* plus_sq, double* minus_sq);
CVENTLAB_API cvl_status cvl_fiber_evolve_state(const cvl_gaussian_state* state,
                                               double thermal_photons, double tau,
                                               cvl_gaussian_state** out);
CVENTLAB_API cvl_status cvl_fiber_is_separable(double r0, double thermal_photons, double tau,
                                               int* out);
/* finite is 0 when the threshold diverges (M = 0). */
CVENTLAB_API cvl_status cvl_fiber_separability_time_rescaled(double thermal_photons, double r0,
                                                             int* finite, double* tau);
CVENTLAB_API cvl_status cvl_fiber_separability_time_rescaled_from_photons(double thermal_photons,
                                                                          double photons,
                                                                          int* finite,
                                                                          double* tau);
CVENTLAB_API cvl_status cvl_fiber_separability_time(double damping, double thermal_photons,
                                                    double photons, int* finite, double* t);
CVENTLAB_API cvl_status cvl_fiber_separability_time_large_photon_limit(double damping,
                                                                       double thermal_photons,
                                                                       double* t);
CVENTLAB_API cvl_status cvl_fiber_scan_separability(double r0, double thermal_photons,
                                                    double tau_max, size_t steps, int* found,
                                                    double* tau, size_t* grid_index);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* CVENTLAB_CVENTLAB_H_ */
