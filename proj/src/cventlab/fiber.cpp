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

#include "cventlab/fiber.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cventlab/errors.hpp"

namespace cventlab::fiber {
namespace {

void require_photons(double m) {
  if (!(m >= 0.0) || !std::isfinite(m)) throw DomainError("thermal photons M must be >= 0");
}

void require_tau(double tau) {
  if (!(tau >= 0.0)) throw DomainError("time must be >= 0");
}

double drift_for(double thermal_photons) {
  require_photons(thermal_photons);
  return 1.0 / (2.0 * thermal_photons + 1.0);
}

// -(N - sqrt(N(N+2))) = 1 - e^{-2 r0}, in a form that is stable for large N.
double photon_gap(double photons) {
  if (!(photons >= 0.0) || !std::isfinite(photons)) throw DomainError("N must be >= 0");
  return 2.0 * photons / (photons + std::sqrt(photons * (photons + 2.0)));
}

}  // namespace

double FiberParams::drift() const { return drift_for(thermal_photons); }

double FiberParams::rescaled_time(double t) const {
  if (!(damping > 0.0)) throw DomainError("damping rate must be > 0");
  return damping * t / drift();
}

double FiberParams::physical_time(double tau) const {
  if (!(damping > 0.0)) throw DomainError("damping rate must be > 0");
  return tau * drift() / damping;
}

EprVariances evolve_variances(double r0, double thermal_photons, double tau) {
  if (!(r0 >= 0.0)) throw DomainError("r0 must be >= 0");
  require_tau(tau);
  const double gamma = drift_for(thermal_photons);
  const double decay = std::exp(-gamma * tau);
  const double diffusion = -std::expm1(-gamma * tau) / (4.0 * gamma);
  return {decay * 0.25 * std::exp(2.0 * r0) + diffusion,
          decay * 0.25 * std::exp(-2.0 * r0) + diffusion};
}

gaussian::GaussianTwoModeState evolve_state(const gaussian::GaussianTwoModeState& state,
                                            double thermal_photons, double tau) {
  require_tau(tau);
  const double gamma = drift_for(thermal_photons);
  const double decay = std::exp(-gamma * tau);
  const double diffusion = -std::expm1(-gamma * tau) / (4.0 * gamma);
  const gaussian::Matrix4 cov =
      decay * state.cov() + diffusion * gaussian::Matrix4::Identity();
  return gaussian::GaussianTwoModeState(std::sqrt(decay) * state.mean(), cov);
}

bool is_separable(double r0, double thermal_photons, double tau) {
  if (!(r0 >= 0.0)) throw DomainError("r0 must be >= 0");
  require_tau(tau);
  const double gamma = drift_for(thermal_photons);
  const double gain = thermal_photons == 0.0 ? 0.0 : 0.5 * thermal_photons * std::expm1(gamma * tau);
  // 1/4 - sigma^2 for the squeezed and anti-squeezed combinations.
  const double deficit_minus = -0.25 * std::expm1(-2.0 * r0);
  const double deficit_plus = -0.25 * std::expm1(2.0 * r0);
  return gain >= deficit_minus && gain >= deficit_plus;
}

std::optional<double> separability_time_rescaled(double thermal_photons, double r0) {
  if (!(r0 >= 0.0)) throw DomainError("r0 must be >= 0");
  const double gamma = drift_for(thermal_photons);
  if (thermal_photons == 0.0) return std::nullopt;
  const double inner = gamma * -std::expm1(-2.0 * r0) / (1.0 - gamma);
  return std::log1p(inner) / gamma;
}

std::optional<double> separability_time_rescaled_from_photons(double thermal_photons,
                                                              double photons) {
  require_photons(thermal_photons);
  const double gap = photon_gap(photons);
  if (thermal_photons == 0.0) return std::nullopt;
  return (2.0 * thermal_photons + 1.0) * std::log1p(gap / (2.0 * thermal_photons));
}

std::optional<double> separability_time(double damping, double thermal_photons, double photons) {
  if (!(damping > 0.0)) throw DomainError("damping rate must be > 0");
  require_photons(thermal_photons);
  const double gap = photon_gap(photons);
  if (thermal_photons == 0.0) return std::nullopt;
  return std::log1p(gap / (2.0 * thermal_photons)) / damping;
}

double separability_time_large_photon_limit(double damping, double thermal_photons) {
  if (!(damping > 0.0)) throw DomainError("damping rate must be > 0");
  require_photons(thermal_photons);
  if (thermal_photons == 0.0) return INFINITY;
  return std::log1p(1.0 / (2.0 * thermal_photons)) / damping;
}

ScanResult scan_separability(double r0, double thermal_photons, double tau_max,
                             std::size_t steps) {
  if (steps < 2) throw InvalidArgument("steps must be >= 2");
  if (!(tau_max > 0.0) || !std::isfinite(tau_max)) throw DomainError("tau_max must be > 0");
  ScanResult result;
  const double h = tau_max / static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) {
    const double tau = i + 1 == steps ? tau_max : h * static_cast<double>(i);
    if (!is_separable(r0, thermal_photons, tau)) continue;
    result.found = true;
    result.grid_index = i;
    if (i == 0) {
      result.tau = 0.0;
      return result;
    }
    double lo = h * static_cast<double>(i - 1);
    double hi = tau;
    for (int iter = 0; iter < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (is_separable(r0, thermal_photons, mid)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    result.tau = 0.5 * (lo + hi);
    return result;
  }
  return result;
}

}  // namespace cventlab::fiber
