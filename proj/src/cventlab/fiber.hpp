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

// Twin beams propagating through a pair of identical lossy/amplifying
// fibers (damping rate Gamma, M thermal photons per mode).
//
// Every quadrature relaxes as an Ornstein-Uhlenbeck process in the rescaled
// time tau = (Gamma / gamma) t with gamma = 1 / (2M + 1):
//   Var(tau) = e^{-gamma tau} Var(0) + (1 - e^{-gamma tau}) / (4 gamma).

#ifndef CVENTLAB_FIBER_HPP_
#define CVENTLAB_FIBER_HPP_

#include <cstddef>
#include <optional>

#include "cventlab/gaussian_core.hpp"

namespace cventlab::fiber {

struct FiberParams {
  double damping = 1.0;          // Gamma > 0
  double thermal_photons = 0.0;  // M >= 0

  double drift() const;                  // gamma = 1 / (2M + 1)
  double rescaled_time(double t) const;  // tau = Gamma t / gamma
  double physical_time(double tau) const;
};

struct EprVariances {
  double plus_sq = 0.25;
  double minus_sq = 0.25;
};

EprVariances evolve_variances(double r0, double thermal_photons, double tau);

// Same evolution on an arbitrary two-mode Gaussian state: covariance
// e^{-gamma tau} V + D^2 I, means scaled by e^{-gamma tau / 2}.
gaussian::GaussianTwoModeState evolve_state(const gaussian::GaussianTwoModeState& state,
                                            double thermal_photons, double tau);

// PPT separability of the evolved twin beam, i.e. Sigma_-^2(tau) >= 1/4,
// rearranged as (M/2) expm1(gamma tau) >= 1/4 - sigma_-^2 so that the
// decision stays exact when e^{-gamma tau} underflows.
bool is_separable(double r0, double thermal_photons, double tau);

// tau_s = (1/gamma) log(1 + gamma (1 - e^{-2 r0}) / (1 - gamma)).
// nullopt for M = 0, where the threshold diverges.
std::optional<double> separability_time_rescaled(double thermal_photons, double r0);

// tau_s = (2M + 1) log(1 - (N - sqrt(N(N+2))) / (2M)), the same threshold
// written with the twin-beam photon number.
std::optional<double> separability_time_rescaled_from_photons(double thermal_photons,
                                                              double photons);

// t_s = (1/Gamma) log(1 - (N - sqrt(N(N+2))) / (2M)).
std::optional<double> separability_time(double damping, double thermal_photons, double photons);

// (1/Gamma) log(1 + 1/(2M)): limit of t_s for N -> infinity.
double separability_time_large_photon_limit(double damping, double thermal_photons);

struct ScanResult {
  bool found = false;
  double tau = 0.0;
  std::size_t grid_index = 0;  // first separable grid point
};

// Evaluates separability on `steps` equally spaced points of [0, tau_max],
// then bisects between the last entangled and first separable point.
ScanResult scan_separability(double r0, double thermal_photons, double tau_max,
                             std::size_t steps);

}  // namespace cventlab::fiber

#endif  // CVENTLAB_FIBER_HPP_
