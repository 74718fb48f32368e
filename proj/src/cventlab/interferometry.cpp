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

#include "cventlab/interferometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cventlab/errors.hpp"
#include "cventlab/fock_oracle.hpp"

namespace cventlab::interferometry {
namespace {

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError(std::string(what) + " must lie in [0, 1]");
}

fock::FockTwoModeState evolved_twin_beam(double x, double phi, std::optional<int> d_max,
                                         double tail_tolerance) {
  if (!(x >= 0.0 && x < 1.0)) throw DomainError("x must lie in [0, 1)");
  const int suggested = fock::default_cutoff(x, tail_tolerance);
  int cutoff = suggested;
  if (d_max) {
    if (*d_max < 0) throw InvalidArgument("d_max must be >= 0");
    if (fock::twin_beam_tail(x, *d_max) > tail_tolerance) {
      throw TruncationError("twin-beam truncation tail above tolerance; use d_max >= " +
                                std::to_string(suggested),
                            suggested);
    }
    cutoff = *d_max;
  }
  return fock::apply_jx_evolution(fock::twin_beam_fock(x, cutoff), phi);
}

}  // namespace

double np_detection_probability(double q0, double kappa_sq) {
  require_probability(q0, "false-alarm probability");
  require_probability(kappa_sq, "overlap |kappa|^2");
  if (q0 >= kappa_sq) return 1.0;
  const double amp = std::sqrt(q0 * kappa_sq) + std::sqrt((1.0 - q0) * (1.0 - kappa_sq));
  return std::max(q0, std::min(1.0, amp * amp));
}

double twin_beam_overlap_sq(double photons, double phi) {
  if (!(photons >= 0.0) || !std::isfinite(photons)) throw DomainError("N must be >= 0");
  const double s = std::sin(phi);
  return 1.0 / (1.0 + photons * (photons + 2.0) * s * s);
}

double false_alarm_penalty(double q0, double gamma_star) {
  require_probability(q0, "false-alarm probability");
  if (!(gamma_star >= 1.0)) throw DomainError("acceptance ratio must be >= 1");
  const double inner = gamma_star * (1.0 - q0) * (1.0 - gamma_star * q0);
  if (inner < 0.0) throw DomainError("gamma* Q0 must not exceed 1");
  return q0 * (1.0 + gamma_star * (1.0 - 2.0 * q0) - 2.0 * std::sqrt(inner));
}

double acceptance_probability(double prior, double gamma_star) {
  if (!(prior > 0.0 && prior <= 1.0)) throw DomainError("prior must lie in (0, 1]");
  if (!(gamma_star >= 1.0)) throw DomainError("acceptance ratio must be >= 1");
  return prior * gamma_star / (prior * gamma_star + 1.0 - prior);
}

MinDetectablePhase min_detectable_phase_ideal(double q0, double gamma_star, double photons) {
  if (!(photons > 0.0) || !std::isfinite(photons)) throw DomainError("N must be > 0");
  const double lambda = false_alarm_penalty(q0, gamma_star);
  if (!(lambda > 0.0 && lambda < 1.0)) throw DomainError("g(Q0, gamma*) must lie in (0, 1)");
  MinDetectablePhase out;
  out.lambda = lambda;
  const double ratio = std::sqrt(lambda / (1.0 - lambda));
  out.asymptotic = ratio / photons;
  const double arg = ratio / std::sqrt(photons * (photons + 2.0));
  out.detectable = arg <= 1.0;
  out.phi_min = out.detectable ? std::asin(arg) : std::numbers::pi / 2.0;
  return out;
}

double mz_zero_count_probability(double x, double phi, std::optional<int> d_max,
                                 double tail_tolerance) {
  return fock::zero_difference_probability(evolved_twin_beam(x, phi, d_max, tail_tolerance));
}

double mz_detection_probability(double x, double phi, std::optional<int> d_max,
                                double tail_tolerance) {
  return fock::nonzero_difference_probability(evolved_twin_beam(x, phi, d_max, tail_tolerance));
}

double mz_min_phase(double target_q_phi, double photons) {
  if (!(target_q_phi > 0.0 && target_q_phi < 1.0)) throw DomainError("Q_phi must lie in (0, 1)");
  if (!(photons > 0.0) || !std::isfinite(photons)) throw DomainError("N must be > 0");
  return std::sqrt(2.0 * target_q_phi) / photons;
}

std::optional<double> mz_invert_phase(double x, double target_q_phi, std::optional<int> d_max) {
  if (!(target_q_phi > 0.0 && target_q_phi < 1.0)) throw DomainError("Q_phi must lie in (0, 1)");
  double lo = 0.0;
  double hi = std::numbers::pi / 4.0;
  if (mz_detection_probability(x, hi, d_max) < target_q_phi) return std::nullopt;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (mz_detection_probability(x, mid, d_max) < target_q_phi) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace cventlab::interferometry
