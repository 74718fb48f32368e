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

#include "cventlab/estimation.hpp"

#include <cmath>

#include "cventlab/errors.hpp"
#include "cventlab/gaussian_core.hpp"

namespace cventlab::estimation {
namespace {

using gaussian::GaussianTwoModeState;

void validate(const EstimationSetting& s) {
  if (!(s.x >= 0.0 && s.x < 1.0)) throw DomainError("x must lie in [0, 1)");
  if (!(s.nbar_total >= 0.0) || !std::isfinite(s.nbar_total)) {
    throw DomainError("nbar_total must be a finite value >= 0");
  }
  if (!std::isfinite(s.alpha.real()) || !std::isfinite(s.alpha.imag())) {
    throw DomainError("alpha must be finite");
  }
}

// Noise commutes with displacement, so all of it is applied after D(alpha).
GaussianTwoModeState entangled_probe(const EstimationSetting& s) {
  auto state = gaussian::make_twin_beam(gaussian::TwinBeamParams::from_schmidt(s.x));
  state = gaussian::apply_displacement(state, s.alpha, gaussian::Mode::kFirst);
  return gaussian::apply_gaussian_noise(state, {s.nbar_total}, gaussian::ModeSelection::kBoth);
}

// Mode 2 plays the vacuum ancilla of the single-mode heterodyne receiver.
GaussianTwoModeState unentangled_probe(const EstimationSetting& s) {
  auto state = gaussian::apply_displacement(GaussianTwoModeState::vacuum(), s.alpha,
                                            gaussian::Mode::kFirst);
  return gaussian::apply_gaussian_noise(state, {s.nbar_total}, gaussian::ModeSelection::kFirst);
}

double rms_error(const GaussianTwoModeState& state, std::complex<double> alpha, std::size_t n,
                 std::uint64_t seed) {
  const auto samples = gaussian::sample_heterodyne(state, n, seed);
  double sum = 0.0;
  for (const auto& z : samples) sum += std::norm(z - alpha);
  return std::sqrt(sum / static_cast<double>(n));
}

}  // namespace

ConditionalVariances conditional_variance(const EstimationSetting& setting) {
  validate(setting);
  return {gaussian::heterodyne_statistics(entangled_probe(setting)).variance,
          gaussian::heterodyne_statistics(unentangled_probe(setting)).variance};
}

bool entanglement_convenient(const EstimationSetting& setting) {
  const auto v = conditional_variance(setting);
  return v.entangled < v.unentangled;
}

double convenience_threshold(double x) {
  return 1.0 - gaussian::twin_beam_heterodyne_variance(x);
}

EstimationRun simulate_estimation(const EstimationSetting& setting, std::size_t n_trials,
                                  std::uint64_t seed) {
  validate(setting);
  if (n_trials == 0) throw InvalidArgument("n_trials must be >= 1");
  EstimationRun run;
  run.trials = n_trials;
  run.rms_entangled = rms_error(entangled_probe(setting), setting.alpha, n_trials, seed);
  run.rms_unentangled =
      rms_error(unentangled_probe(setting), setting.alpha, n_trials, seed ^ 0x9e3779b97f4a7c15ULL);
  return run;
}

}  // namespace cventlab::estimation
