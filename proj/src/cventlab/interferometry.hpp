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

// Neyman-Pearson detection of a beam-splitter-like phase perturbation
// exp(i phi (a^dag b + a b^dag)), for the ideal receiver and for a
// Mach-Zehnder with difference-photocurrent detection.

#ifndef CVENTLAB_INTERFEROMETRY_HPP_
#define CVENTLAB_INTERFEROMETRY_HPP_

#include <optional>

namespace cventlab::interferometry {

// Optimal pure-state detection probability at false-alarm probability q0:
// [sqrt(q0 k) + sqrt((1-q0)(1-k))]^2 for q0 <= k, 1 otherwise.
double np_detection_probability(double q0, double kappa_sq);

// [1 + N(N+2) sin^2 phi]^{-1}.
double twin_beam_overlap_sq(double photons, double phi);

// g(Q0, gamma*) = Q0 [1 + gamma*(1 - 2 Q0) - 2 sqrt(gamma*(1-Q0)(1-gamma* Q0))].
// This is also the Lambda of the minimum-detectable-phase formula:
// requiring Q_phi = gamma* Q0 means |kappa|^2 = 1 - g.
double false_alarm_penalty(double q0, double gamma_star);

// Posterior probability that a detection is genuine:
// p gamma* / (p gamma* + 1 - p).
double acceptance_probability(double prior, double gamma_star);

struct MinDetectablePhase {
  bool detectable = false;  // false when the arcsin argument exceeds 1
  double phi_min = 0.0;
  double lambda = 0.0;      // g(Q0, gamma*)
  double asymptotic = 0.0;  // sqrt(Lambda/(1-Lambda)) / N

  double acceptance(double prior, double gamma_star) const {
    return acceptance_probability(prior, gamma_star);
  }
};

// arcsin( sqrt(Lambda/(1-Lambda)) / sqrt(N(N+2)) ). Throws DomainError when
// gamma* Q0 >= 1 or Lambda falls outside (0, 1).
MinDetectablePhase min_detectable_phase_ideal(double q0, double gamma_star, double photons);

inline constexpr double kDefaultTailTolerance = 1e-10;

// Zero-count probability of the difference photocurrent after the
// perturbation, evaluated in truncated Fock space. When d_max is omitted it
// is chosen from x so that the twin-beam tail is below tail_tolerance; an
// explicit d_max with a larger tail throws TruncationError carrying the
// suggested cutoff.
double mz_zero_count_probability(double x, double phi, std::optional<int> d_max = std::nullopt,
                                 double tail_tolerance = kDefaultTailTolerance);

// 1 - P(d = 0) without the cancellation of forming it from P(d = 0).
double mz_detection_probability(double x, double phi, std::optional<int> d_max = std::nullopt,
                                double tail_tolerance = kDefaultTailTolerance);

// sqrt(2 Q_phi) / N.
double mz_min_phase(double target_q_phi, double photons);

// Smallest phi with mz_detection_probability(x, phi) = target, found by
// bisection (tolerance 1e-10) on [0, pi/4], the branch on which detection
// grows monotonically. nullopt if the target is not reached there.
std::optional<double> mz_invert_phase(double x, double target_q_phi,
                                      std::optional<int> d_max = std::nullopt);

}  // namespace cventlab::interferometry

#endif  // CVENTLAB_INTERFEROMETRY_HPP_
