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

#include "cventlab/cventlab.h"

#include <algorithm>
#include <complex>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "cventlab/crypto.hpp"
#include "cventlab/discrimination.hpp"
#include "cventlab/errors.hpp"
#include "cventlab/estimation.hpp"
#include "cventlab/fiber.hpp"
#include "cventlab/fock_oracle.hpp"
#include "cventlab/gaussian_core.hpp"
#include "cventlab/interferometry.hpp"

namespace cg = cventlab::gaussian;
namespace cf = cventlab::fock;
namespace cd = cventlab::discrimination;

struct cvl_gaussian_state {
  cg::GaussianTwoModeState value;
};

struct cvl_fock_state {
  cf::FockTwoModeState value;
};

struct cvl_polygon {
  cd::EigenphaseSpectrum spectrum;
  cd::PolygonK polygon;
};

namespace {

thread_local std::string last_error;
thread_local int last_cutoff = -1;

struct NullPointer : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BufferTooSmall : std::length_error {
  using std::length_error::length_error;
};

template <typename T>
T* need(T* ptr, const char* name) {
  if (ptr == nullptr) throw NullPointer(std::string(name) + " must not be null");
  return ptr;
}

template <typename Fn>
cvl_status guarded(Fn&& fn) {
  last_error.clear();
  last_cutoff = -1;
  try {
    fn();
    return CVL_OK;
  } catch (const NullPointer& e) {
    last_error = e.what();
    return CVL_ERR_NULL_POINTER;
  } catch (const BufferTooSmall& e) {
    last_error = e.what();
    return CVL_ERR_BUFFER_TOO_SMALL;
  } catch (const cventlab::TruncationError& e) {
    last_error = e.what();
    last_cutoff = e.suggested_cutoff();
    return CVL_ERR_TRUNCATION;
  } catch (const cventlab::UnsupportedState& e) {
    last_error = e.what();
    return CVL_ERR_UNSUPPORTED_STATE;
  } catch (const cventlab::DomainError& e) {
    last_error = e.what();
    return CVL_ERR_DOMAIN;
  } catch (const cventlab::InvalidArgument& e) {
    last_error = e.what();
    return CVL_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CVL_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CVL_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return CVL_ERR_INTERNAL;
  }
}

cg::Mode to_mode(int mode) {
  if (mode == 1) return cg::Mode::kFirst;
  if (mode == 2) return cg::Mode::kSecond;
  throw cventlab::InvalidArgument("mode must be 1 or 2");
}

cg::ModeSelection to_selection(int modes) {
  switch (modes) {
    case CVL_MODE_FIRST:
      return cg::ModeSelection::kFirst;
    case CVL_MODE_SECOND:
      return cg::ModeSelection::kSecond;
    case CVL_MODE_BOTH:
      return cg::ModeSelection::kBoth;
    default:
      throw cventlab::InvalidArgument("modes must be 1, 2 or 3");
  }
}

cg::TwinBeamParams to_params(cvl_twin_beam_input kind, double value) {
  switch (kind) {
    case CVL_TWIN_BEAM_SQUEEZING:
      return cg::TwinBeamParams::from_squeezing(value);
    case CVL_TWIN_BEAM_SCHMIDT:
      return cg::TwinBeamParams::from_schmidt(value);
    case CVL_TWIN_BEAM_PHOTONS:
      return cg::TwinBeamParams::from_photons(value);
  }
  throw cventlab::InvalidArgument("unknown twin-beam parameter kind");
}

std::optional<int> to_cutoff(int d_max) {
  return d_max < 0 ? std::nullopt : std::optional<int>(d_max);
}

cvl_gaussian_state* wrap(cg::GaussianTwoModeState s) {
  return new cvl_gaussian_state{std::move(s)};
}

cvl_fock_state* wrap(cf::FockTwoModeState s) { return new cvl_fock_state{std::move(s)}; }

cvl_polygon* wrap(cd::EigenphaseSpectrum s) {
  cd::PolygonK poly = cd::build_polygon(s);
  return new cvl_polygon{std::move(s), std::move(poly)};
}

cventlab::estimation::EstimationSetting to_setting(const cvl_estimation_setting* s) {
  need(s, "setting");
  return {s->x, s->nbar_total, {s->alpha_re, s->alpha_im}};
}

void set_optional(const std::optional<double>& v, int* finite, double* out) {
  *finite = v.has_value() ? 1 : 0;
  if (v) *out = *v;
}

}  // namespace

extern "C" {

const char* cvl_version(void) { return "0.1.0"; }

const char* cvl_status_string(cvl_status status) {
  switch (status) {
    case CVL_OK:
      return "ok";
    case CVL_ERR_DOMAIN:
      return "domain error";
    case CVL_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case CVL_ERR_UNSUPPORTED_STATE:
      return "unsupported state";
    case CVL_ERR_TRUNCATION:
      return "truncation error";
    case CVL_ERR_NULL_POINTER:
      return "null pointer";
    case CVL_ERR_BUFFER_TOO_SMALL:
      return "buffer too small";
    case CVL_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* cvl_last_error_message(void) { return last_error.c_str(); }

int cvl_last_suggested_cutoff(void) { return last_cutoff; }

// ---- Gaussian states ------------------------------------------------------

cvl_status cvl_twin_beam_params(cvl_twin_beam_input kind, double value, double* r0, double* x,
                                double* photons) {
  return guarded([&] {
    need(r0, "r0");
    need(x, "x");
    need(photons, "photons");
    const cg::TwinBeamParams p = to_params(kind, value);
    *r0 = p.r0;
    *x = p.x;
    *photons = p.photons;
  });
}

cvl_status cvl_gaussian_create(const double mean[4], const double cov[16],
                               cvl_gaussian_state** out) {
  return guarded([&] {
    need(mean, "mean");
    need(cov, "cov");
    need(out, "out");
    const cg::Vector4 m = Eigen::Map<const cg::Vector4>(mean);
    const cg::Matrix4 c = Eigen::Map<const Eigen::Matrix<double, 4, 4, Eigen::RowMajor>>(cov);
    *out = wrap(cg::GaussianTwoModeState(m, c));
  });
}

cvl_status cvl_gaussian_vacuum(cvl_gaussian_state** out) {
  return guarded([&] { *need(out, "out") = wrap(cg::GaussianTwoModeState::vacuum()); });
}

cvl_status cvl_gaussian_twin_beam(cvl_twin_beam_input kind, double value,
                                  cvl_gaussian_state** out) {
  return guarded([&] { *need(out, "out") = wrap(cg::make_twin_beam(to_params(kind, value))); });
}

cvl_status cvl_gaussian_twin_beam_family(double sigma_plus_sq, double sigma_minus_sq,
                                         cvl_gaussian_state** out) {
  return guarded([&] {
    *need(out, "out") = wrap(cg::make_twin_beam_family(sigma_plus_sq, sigma_minus_sq));
  });
}

void cvl_gaussian_free(cvl_gaussian_state* state) { delete state; }

cvl_status cvl_gaussian_moments(const cvl_gaussian_state* state, double mean[4],
                                double cov[16]) {
  return guarded([&] {
    need(state, "state");
    if (mean != nullptr) {
      Eigen::Map<cg::Vector4> m(mean);
      m = state->value.mean();
    }
    if (cov != nullptr) {
      Eigen::Map<Eigen::Matrix<double, 4, 4, Eigen::RowMajor>> c(cov);
      c = state->value.cov();
    }
  });
}

cvl_status cvl_gaussian_displace(const cvl_gaussian_state* state, double alpha_re,
                                 double alpha_im, int mode, cvl_gaussian_state** out) {
  return guarded([&] {
    need(state, "state");
    need(out, "out");
    *out = wrap(cg::apply_displacement(state->value, {alpha_re, alpha_im}, to_mode(mode)));
  });
}

cvl_status cvl_gaussian_add_noise(const cvl_gaussian_state* state, double nbar, int modes,
                                  cvl_gaussian_state** out) {
  return guarded([&] {
    need(state, "state");
    need(out, "out");
    *out = wrap(cg::apply_gaussian_noise(state->value, {nbar}, to_selection(modes)));
  });
}

cvl_status cvl_twin_beam_heterodyne_variance(double x, double* out) {
  return guarded([&] { *need(out, "out") = cg::twin_beam_heterodyne_variance(x); });
}

cvl_status cvl_gaussian_heterodyne_statistics(const cvl_gaussian_state* state, double* mean_re,
                                              double* mean_im, double* variance) {
  return guarded([&] {
    need(state, "state");
    need(mean_re, "mean_re");
    need(mean_im, "mean_im");
    need(variance, "variance");
    const cg::HeterodyneStatistics s = cg::heterodyne_statistics(state->value);
    *mean_re = s.mean.real();
    *mean_im = s.mean.imag();
    *variance = s.variance;
  });
}

cvl_status cvl_gaussian_heterodyne_pdf(const cvl_gaussian_state* state, double z_re, double z_im,
                                       double* out) {
  return guarded([&] {
    need(state, "state");
    *need(out, "out") = cg::heterodyne_pdf(state->value, {z_re, z_im});
  });
}

cvl_status cvl_gaussian_sample_heterodyne(const cvl_gaussian_state* state, size_t n_samples,
                                          uint64_t seed, double* out) {
  return guarded([&] {
    need(state, "state");
    if (n_samples == 0) return;
    need(out, "out");
    const auto samples = cg::sample_heterodyne(state->value, n_samples, seed);
    for (size_t i = 0; i < samples.size(); ++i) {
      out[2 * i] = samples[i].real();
      out[2 * i + 1] = samples[i].imag();
    }
  });
}

cvl_status cvl_symplectic_eigenvalues(const double cov[16], double* nu_minus, double* nu_plus) {
  return guarded([&] {
    need(cov, "cov");
    need(nu_minus, "nu_minus");
    need(nu_plus, "nu_plus");
    const cg::Matrix4 c = Eigen::Map<const Eigen::Matrix<double, 4, 4, Eigen::RowMajor>>(cov);
    const auto [lo, hi] = cg::symplectic_eigenvalues(c);
    *nu_minus = lo;
    *nu_plus = hi;
  });
}

cvl_status cvl_gaussian_ppt(const cvl_gaussian_state* state, int* separable, double* witness) {
  return guarded([&] {
    need(state, "state");
    need(separable, "separable");
    need(witness, "witness");
    const cg::PptResult r = cg::ppt_separable(state->value);
    *separable = r.separable ? 1 : 0;
    *witness = r.witness;
  });
}

// ---- Truncated Fock space -------------------------------------------------

cvl_status cvl_fock_twin_beam_tail(double x, int d_max, double* out) {
  return guarded([&] { *need(out, "out") = cf::twin_beam_tail(x, d_max); });
}

cvl_status cvl_fock_default_cutoff(double x, double tail_tolerance, int* out) {
  return guarded([&] { *need(out, "out") = cf::default_cutoff(x, tail_tolerance); });
}

cvl_status cvl_fock_twin_beam(double x, int d_max, cvl_fock_state** out) {
  return guarded([&] { *need(out, "out") = wrap(cf::twin_beam_fock(x, d_max)); });
}

void cvl_fock_free(cvl_fock_state* state) { delete state; }

cvl_status cvl_fock_max_photons(const cvl_fock_state* state, int* out) {
  return guarded([&] { *need(out, "out") = need(state, "state")->value.max_photons(); });
}

cvl_status cvl_fock_truncation_tail(const cvl_fock_state* state, double* out) {
  return guarded([&] { *need(out, "out") = need(state, "state")->value.truncation_tail(); });
}

cvl_status cvl_fock_norm_squared(const cvl_fock_state* state, double* out) {
  return guarded([&] { *need(out, "out") = need(state, "state")->value.norm_squared(); });
}

cvl_status cvl_fock_amplitude(const cvl_fock_state* state, int p, int q, double* re,
                              double* im) {
  return guarded([&] {
    need(state, "state");
    need(re, "re");
    need(im, "im");
    const auto& amps = state->value.amplitudes();
    if (p < 0 || q < 0 || p >= amps.rows() || q >= amps.cols()) {
      throw cventlab::InvalidArgument("photon index outside the stored range");
    }
    *re = amps(p, q).real();
    *im = amps(p, q).imag();
  });
}

cvl_status cvl_fock_jx_evolve(const cvl_fock_state* state, double phi, cvl_fock_state** out) {
  return guarded([&] {
    need(state, "state");
    *need(out, "out") = wrap(cf::apply_jx_evolution(state->value, phi));
  });
}

cvl_status cvl_fock_displace(const cvl_fock_state* state, double beta_re, double beta_im,
                             int mode, cvl_fock_state** out) {
  return guarded([&] {
    need(state, "state");
    *need(out, "out") = wrap(cf::apply_displacement(state->value, {beta_re, beta_im}, mode));
  });
}

cvl_status cvl_fock_overlap(const cvl_fock_state* a, const cvl_fock_state* b, double* re,
                            double* im) {
  return guarded([&] {
    need(a, "a");
    need(b, "b");
    need(re, "re");
    need(im, "im");
    const std::complex<double> v = cf::overlap(a->value, b->value);
    *re = v.real();
    *im = v.imag();
  });
}

cvl_status cvl_fock_zero_difference_probability(const cvl_fock_state* state, double* out) {
  return guarded([&] {
    *need(out, "out") = cf::zero_difference_probability(need(state, "state")->value);
  });
}

cvl_status cvl_fock_nonzero_difference_probability(const cvl_fock_state* state, double* out) {
  return guarded([&] {
    *need(out, "out") = cf::nonzero_difference_probability(need(state, "state")->value);
  });
}

cvl_status cvl_fock_quadrature_means(const cvl_fock_state* state, double out[4]) {
  return guarded([&] {
    need(state, "state");
    need(out, "out");
    Eigen::Map<Eigen::Vector4d> m(out);
    m = cf::quadrature_means(state->value);
  });
}

// ---- Displacement estimation ----------------------------------------------

cvl_status cvl_conditional_variance(const cvl_estimation_setting* setting, double* entangled,
                                    double* unentangled) {
  return guarded([&] {
    need(entangled, "entangled");
    need(unentangled, "unentangled");
    const auto v = cventlab::estimation::conditional_variance(to_setting(setting));
    *entangled = v.entangled;
    *unentangled = v.unentangled;
  });
}

cvl_status cvl_entanglement_convenient(const cvl_estimation_setting* setting, int* out) {
  return guarded([&] {
    need(out, "out");
    *out = cventlab::estimation::entanglement_convenient(to_setting(setting)) ? 1 : 0;
  });
}

cvl_status cvl_convenience_threshold(double x, double* out) {
  return guarded([&] { *need(out, "out") = cventlab::estimation::convenience_threshold(x); });
}

cvl_status cvl_simulate_estimation(const cvl_estimation_setting* setting, size_t n_trials,
                                   uint64_t seed, double* rms_entangled,
                                   double* rms_unentangled) {
  return guarded([&] {
    need(rms_entangled, "rms_entangled");
    need(rms_unentangled, "rms_unentangled");
    const auto run =
        cventlab::estimation::simulate_estimation(to_setting(setting), n_trials, seed);
    *rms_entangled = run.rms_entangled;
    *rms_unentangled = run.rms_unentangled;
  });
}

// ---- Unitary discrimination -----------------------------------------------

cvl_status cvl_polygon_create(const double* phases, size_t n_phases, cvl_polygon** out) {
  return guarded([&] {
    need(out, "out");
    if (n_phases > 0) need(phases, "phases");
    *out = wrap(cd::EigenphaseSpectrum(std::span<const double>(phases, n_phases)));
  });
}

void cvl_polygon_free(cvl_polygon* polygon) { delete polygon; }

cvl_status cvl_polygon_size(const cvl_polygon* polygon, size_t* out) {
  return guarded([&] { *need(out, "out") = need(polygon, "polygon")->spectrum.size(); });
}

cvl_status cvl_polygon_phases(const cvl_polygon* polygon, double* out, size_t capacity) {
  return guarded([&] {
    const auto& phases = need(polygon, "polygon")->spectrum.phases();
    if (capacity < phases.size()) throw BufferTooSmall("capacity below the number of phases");
    std::copy(phases.begin(), phases.end(), need(out, "out"));
  });
}

cvl_status cvl_polygon_distance(const cvl_polygon* polygon, double* out) {
  return guarded([&] { *need(out, "out") = need(polygon, "polygon")->polygon.distance; });
}

cvl_status cvl_polygon_spread(const cvl_polygon* polygon, double* out) {
  return guarded([&] { *need(out, "out") = need(polygon, "polygon")->polygon.spread; });
}

cvl_status cvl_polygon_min_error_probability(const cvl_polygon* polygon, double* out) {
  return guarded([&] {
    *need(out, "out") = cd::min_error_probability(need(polygon, "polygon")->polygon);
  });
}

cvl_status cvl_polygon_probe_weights(const cvl_polygon* polygon, double* out, size_t capacity) {
  return guarded([&] {
    const auto w = cd::optimal_probe_weights(need(polygon, "polygon")->polygon);
    if (capacity < w.size()) throw BufferTooSmall("capacity below the number of phases");
    std::copy(w.begin(), w.end(), need(out, "out"));
  });
}

cvl_status cvl_polygon_single_copy_gain(const cvl_polygon* polygon, size_t ancilla_dim,
                                        double* distance_plain, double* distance_extended,
                                        int* equal) {
  return guarded([&] {
    need(distance_plain, "distance_plain");
    need(distance_extended, "distance_extended");
    need(equal, "equal");
    const auto c =
        cd::entanglement_no_single_copy_gain(need(polygon, "polygon")->spectrum, ancilla_dim);
    *distance_plain = c.distance_plain;
    *distance_extended = c.distance_extended;
    *equal = c.equal ? 1 : 0;
  });
}

cvl_status cvl_polygon_copies_for_exact(const cvl_polygon* polygon, int* bounded, size_t* out) {
  return guarded([&] {
    need(bounded, "bounded");
    need(out, "out");
    const auto n = cd::copies_for_exact(need(polygon, "polygon")->spectrum);
    *bounded = n.has_value() ? 1 : 0;
    if (n) *out = *n;
  });
}

cvl_status cvl_polygon_tensor_power(const cvl_polygon* polygon, size_t copies,
                                    cvl_polygon** out) {
  return guarded([&] {
    need(out, "out");
    *out = wrap(cd::tensor_power_spectrum(need(polygon, "polygon")->spectrum, copies));
  });
}

cvl_status cvl_polygon_sampled_min_overlap(const cvl_polygon* polygon, size_t samples,
                                           uint64_t seed, double* out) {
  return guarded([&] {
    *need(out, "out") =
        cd::sampled_min_overlap(need(polygon, "polygon")->spectrum, samples, seed);
  });
}

cvl_status cvl_spread_error_probability(double spread, double* out) {
  return guarded([&] { *need(out, "out") = cd::spread_error_probability(spread); });
}

// ---- Interferometry -------------------------------------------------------

namespace ci = cventlab::interferometry;

cvl_status cvl_np_detection_probability(double q0, double kappa_sq, double* out) {
  return guarded([&] { *need(out, "out") = ci::np_detection_probability(q0, kappa_sq); });
}

cvl_status cvl_twin_beam_overlap_sq(double photons, double phi, double* out) {
  return guarded([&] { *need(out, "out") = ci::twin_beam_overlap_sq(photons, phi); });
}

cvl_status cvl_false_alarm_penalty(double q0, double gamma_star, double* out) {
  return guarded([&] { *need(out, "out") = ci::false_alarm_penalty(q0, gamma_star); });
}

cvl_status cvl_acceptance_probability(double prior, double gamma_star, double* out) {
  return guarded([&] { *need(out, "out") = ci::acceptance_probability(prior, gamma_star); });
}

cvl_status cvl_min_detectable_phase_ideal(double q0, double gamma_star, double photons,
                                          int* detectable, double* phi_min, double* lambda,
                                          double* asymptotic) {
  return guarded([&] {
    need(detectable, "detectable");
    need(phi_min, "phi_min");
    need(lambda, "lambda");
    need(asymptotic, "asymptotic");
    const auto r = ci::min_detectable_phase_ideal(q0, gamma_star, photons);
    *detectable = r.detectable ? 1 : 0;
    *phi_min = r.phi_min;
    *lambda = r.lambda;
    *asymptotic = r.asymptotic;
  });
}

cvl_status cvl_mz_zero_count_probability(double x, double phi, int d_max, double tail_tolerance,
                                         double* out) {
  return guarded([&] {
    *need(out, "out") = ci::mz_zero_count_probability(x, phi, to_cutoff(d_max), tail_tolerance);
  });
}

cvl_status cvl_mz_detection_probability(double x, double phi, int d_max, double tail_tolerance,
                                        double* out) {
  return guarded([&] {
    *need(out, "out") = ci::mz_detection_probability(x, phi, to_cutoff(d_max), tail_tolerance);
  });
}

cvl_status cvl_mz_min_phase(double target_q_phi, double photons, double* out) {
  return guarded([&] { *need(out, "out") = ci::mz_min_phase(target_q_phi, photons); });
}

cvl_status cvl_mz_invert_phase(double x, double target_q_phi, int d_max, int* found,
                               double* phi) {
  return guarded([&] {
    need(found, "found");
    need(phi, "phi");
    set_optional(ci::mz_invert_phase(x, target_q_phi, to_cutoff(d_max)), found, phi);
  });
}

// ---- Key distribution -----------------------------------------------------

namespace cc = cventlab::crypto;

cvl_status cvl_bob_ideal_error(double x, double z0_re, double z0_im, double z1_re, double z1_im,
                               double* out) {
  return guarded([&] {
    *need(out, "out") = cc::bob_ideal_error(x, {z0_re, z0_im}, {z1_re, z1_im});
  });
}

cvl_status cvl_bob_ideal_error_asymptote(double x, double z0_re, double z0_im, double z1_re,
                                         double z1_im, double* out) {
  return guarded([&] {
    *need(out, "out") = cc::bob_ideal_error_asymptote(x, {z0_re, z0_im}, {z1_re, z1_im});
  });
}

cvl_status cvl_coherent_error(double a0_re, double a0_im, double a1_re, double a1_im,
                              double* out) {
  return guarded([&] { *need(out, "out") = cc::coherent_error({a0_re, a0_im}, {a1_re, a1_im}); });
}

cvl_status cvl_eve_error_uniform(double* out) {
  return guarded([&] { *need(out, "out") = cc::eve_error_uniform(); });
}

cvl_status cvl_eve_uniform_key_residual(double x, double a, double radius, double step,
                                        int mode1_cutoff, int mode2_cutoff, double* out) {
  return guarded([&] {
    cc::UniformKeyGrid grid;
    grid.step = step;
    grid.mode1_cutoff = mode1_cutoff;
    grid.mode2_cutoff = mode2_cutoff;
    *need(out, "out") = cc::eve_uniform_key_residual(x, a, radius, grid);
  });
}

cvl_status cvl_eve_error_gaussian_key(double a, double kappa_key, double* out) {
  return guarded([&] { *need(out, "out") = cc::eve_error_gaussian_key(a, kappa_key); });
}

cvl_status cvl_eve_error_gaussian_key_asymptote(double a, double kappa_key, double* out) {
  return guarded(
      [&] { *need(out, "out") = cc::eve_error_gaussian_key_asymptote(a, kappa_key); });
}

cvl_status cvl_positive_eigenvalue_sum(double a, double kappa_key, double* out) {
  return guarded([&] { *need(out, "out") = cc::positive_eigenvalue_sum(a, kappa_key); });
}

cvl_status cvl_receiver_variance(double x, double* out) {
  return guarded([&] { *need(out, "out") = cc::receiver_variance(x); });
}

cvl_status cvl_quoted_receiver_variance(double x, double* out) {
  return guarded([&] { *need(out, "out") = cc::quoted_receiver_variance(x); });
}

cvl_status cvl_bob_heterodyne_error(double x, double a, double nbar, double* out) {
  return guarded([&] { *need(out, "out") = cc::bob_heterodyne_error(x, a, nbar); });
}

cvl_status cvl_eve_heterodyne_error(double x, double a, double kappa_key, double nbar,
                                    double* out) {
  return guarded([&] { *need(out, "out") = cc::eve_heterodyne_error(x, a, kappa_key, nbar); });
}

cvl_status cvl_security_margin(double x, double kappa_key, double a, int* secure,
                               double* bob_error, double* eve_error) {
  return guarded([&] {
    need(secure, "secure");
    need(bob_error, "bob_error");
    need(eve_error, "eve_error");
    const auto m = cc::security_margin(x, kappa_key, a);
    *secure = m.secure ? 1 : 0;
    *bob_error = m.bob_error;
    *eve_error = m.eve_error;
  });
}

cvl_status cvl_alphabet_pdfs(double z0_re, double z0_im, double x, double kappa_key, double z_re,
                             double z_im, double* bob_pdf, double* eve_pdf) {
  return guarded([&] {
    need(bob_pdf, "bob_pdf");
    need(eve_pdf, "eve_pdf");
    const auto p = cc::alphabet_pdfs({z0_re, z0_im}, x, kappa_key);
    *bob_pdf = p.bob_pdf({z_re, z_im});
    *eve_pdf = p.eve_pdf({z_re, z_im});
  });
}

cvl_status cvl_simulate_binary_protocol(const cvl_protocol_config* config, uint64_t n_bits,
                                        uint64_t seed, uint64_t* bob_errors,
                                        uint64_t* eve_errors) {
  return guarded([&] {
    need(config, "config");
    need(bob_errors, "bob_errors");
    need(eve_errors, "eve_errors");
    const cc::ProtocolConfig c{config->x, config->a, config->kappa_key, config->nbar};
    const auto r = cc::simulate_binary_protocol(c, static_cast<std::size_t>(n_bits), seed);
    *bob_errors = r.bob_errors;
    *eve_errors = r.eve_errors;
  });
}

// ---- Fiber propagation ----------------------------------------------------

namespace cfb = cventlab::fiber;

cvl_status cvl_fiber_rescaled_time(double damping, double thermal_photons, double t,
                                   double* tau) {
  return guarded([&] {
    *need(tau, "tau") = cfb::FiberParams{damping, thermal_photons}.rescaled_time(t);
  });
}

cvl_status cvl_fiber_physical_time(double damping, double thermal_photons, double tau,
                                   double* t) {
  return guarded([&] {
    *need(t, "t") = cfb::FiberParams{damping, thermal_photons}.physical_time(tau);
  });
}

cvl_status cvl_fiber_evolve_variances(double r0, double thermal_photons, double tau,
                                      double* plus_sq, double* minus_sq) {
  return guarded([&] {
    need(plus_sq, "plus_sq");
    need(minus_sq, "minus_sq");
    const auto v = cfb::evolve_variances(r0, thermal_photons, tau);
    *plus_sq = v.plus_sq;
    *minus_sq = v.minus_sq;
  });
}

cvl_status cvl_fiber_evolve_state(const cvl_gaussian_state* state, double thermal_photons,
                                  double tau, cvl_gaussian_state** out) {
  return guarded([&] {
    need(state, "state");
    *need(out, "out") = wrap(cfb::evolve_state(state->value, thermal_photons, tau));
  });
}

cvl_status cvl_fiber_is_separable(double r0, double thermal_photons, double tau, int* out) {
  return guarded([&] { *need(out, "out") = cfb::is_separable(r0, thermal_photons, tau) ? 1 : 0; });
}

cvl_status cvl_fiber_separability_time_rescaled(double thermal_photons, double r0, int* finite,
                                                double* tau) {
  return guarded([&] {
    set_optional(cfb::separability_time_rescaled(thermal_photons, r0), need(finite, "finite"),
                 need(tau, "tau"));
  });
}

cvl_status cvl_fiber_separability_time_rescaled_from_photons(double thermal_photons,
                                                             double photons, int* finite,
                                                             double* tau) {
  return guarded([&] {
    set_optional(cfb::separability_time_rescaled_from_photons(thermal_photons, photons),
                 need(finite, "finite"), need(tau, "tau"));
  });
}

cvl_status cvl_fiber_separability_time(double damping, double thermal_photons, double photons,
                                       int* finite, double* t) {
  return guarded([&] {
    set_optional(cfb::separability_time(damping, thermal_photons, photons),
                 need(finite, "finite"), need(t, "t"));
  });
}

cvl_status cvl_fiber_separability_time_large_photon_limit(double damping,
                                                          double thermal_photons, double* t) {
  return guarded([&] {
    *need(t, "t") = cfb::separability_time_large_photon_limit(damping, thermal_photons);
  });
}

cvl_status cvl_fiber_scan_separability(double r0, double thermal_photons, double tau_max,
                                       size_t steps, int* found, double* tau,
                                       size_t* grid_index) {
  return guarded([&] {
    need(found, "found");
    need(tau, "tau");
    need(grid_index, "grid_index");
    const auto r = cfb::scan_separability(r0, thermal_photons, tau_max, steps);
    *found = r.found ? 1 : 0;
    *tau = r.tau;
    *grid_index = r.grid_index;
  });
}

}  // extern "C"
