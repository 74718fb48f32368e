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

// Displacement estimation with a vacuum probe versus a twin-beam probe, in
// the presence of Gaussian noise.

#ifndef CVENTLAB_ESTIMATION_HPP_
#define CVENTLAB_ESTIMATION_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>

namespace cventlab::estimation {

struct EstimationSetting {
  double x = 0.0;           // probe Schmidt parameter, [0, 1)
  double nbar_total = 0.0;  // total Gaussian noise around the displacement
  std::complex<double> alpha{0.0, 0.0};
};

struct ConditionalVariances {
  double entangled = 1.0;    // (1-x)/(1+x) + 2 nbar_total
  double unentangled = 1.0;  // 1 + nbar_total
};

// Both variances are read off the heterodyne statistics of the Gaussian
// states actually prepared: the displaced twin beam with noise on both
// beams, and the displaced vacuum with noise on the probed mode only.
ConditionalVariances conditional_variance(const EstimationSetting& setting);

// sigma_2^2 < sigma_1^2.
bool entanglement_convenient(const EstimationSetting& setting);

// Noise level where the two variances coincide: 1 - (1-x)/(1+x).
double convenience_threshold(double x);

struct EstimationRun {
  double rms_entangled = 0.0;
  double rms_unentangled = 0.0;
  std::size_t trials = 0;
};

// Estimates alpha by the raw heterodyne outcome and reports the RMS error of
// each probe. The two probes draw from disjoint streams derived from `seed`.
EstimationRun simulate_estimation(const EstimationSetting& setting, std::size_t n_trials,
                                  std::uint64_t seed);

}  // namespace cventlab::estimation

#endif  // CVENTLAB_ESTIMATION_HPP_
