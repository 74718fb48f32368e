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

// Minimum-error discrimination of two unitaries through the convex polygon
// spanned by the eigenvalues of U2^dag U1 on the unit circle.

#ifndef CVENTLAB_DISCRIMINATION_HPP_
#define CVENTLAB_DISCRIMINATION_HPP_

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace cventlab::discrimination {

// Eigenphases reduced to [0, 2pi), sorted, with coincident phases (within
// kPhaseTolerance, including across the 2pi wrap) collapsed.
class EigenphaseSpectrum {
 public:
  static constexpr double kPhaseTolerance = 1e-12;

  // Throws InvalidArgument on an empty or non-finite input.
  explicit EigenphaseSpectrum(std::span<const double> phases);

  const std::vector<double>& phases() const { return phases_; }
  std::size_t size() const { return phases_.size(); }

 private:
  std::vector<double> phases_;
};

struct PolygonK {
  std::vector<double> phases;                  // sorted hull vertices
  std::vector<std::complex<double>> vertices;  // e^{i phase}
  double distance = 1.0;  // r: distance from the origin to the hull
  double spread = 0.0;    // Delta: smallest arc covering every phase
  // Nearest hull point as a combination of two vertices; for an origin
  // inside the hull these are unused.
  std::size_t nearest_from = 0;
  std::size_t nearest_to = 0;
  double nearest_t = 0.0;

  bool contains_origin() const { return distance == 0.0; }
};

PolygonK build_polygon(const EigenphaseSpectrum& spectrum);

// Helstrom bound 1/2 (1 - sqrt(1 - r^2)).
double min_error_probability(const PolygonK& polygon);

// 1/2 (1 - sqrt(1 - cos^4(Delta/2))) for Delta < pi, 0 otherwise: the
// spread relation as commonly quoted. It equals min_error_probability only
// when r^2 = cos^4(Delta/2); for points on the circle r = cos(Delta/2), so
// the two generally differ (see README).
double spread_error_probability(double spread);

// Probe weights |psi_j|^2 over the eigenvectors, in the order of
// polygon.phases, achieving |sum_j w_j e^{i gamma_j}| = r.
std::vector<double> optimal_probe_weights(const PolygonK& polygon);

struct SingleCopyComparison {
  double distance_plain = 1.0;
  double distance_extended = 1.0;
  bool equal = true;
};

// Compares the polygon of U2^dag U1 with that of U2^dag U1 (x) I on a
// `ancilla_dim`-dimensional ancilla.
SingleCopyComparison entanglement_no_single_copy_gain(const EigenphaseSpectrum& spectrum,
                                                      std::size_t ancilla_dim = 3);

// Smallest N with N * Delta >= pi, or nullopt when Delta = 0.
std::optional<std::size_t> copies_for_exact(const EigenphaseSpectrum& spectrum);

// Eigenphases of (U2^dag U1)^{(x) copies}: all sums of `copies` phases.
EigenphaseSpectrum tensor_power_spectrum(const EigenphaseSpectrum& spectrum, std::size_t copies);

// Minimum of |sum w_j e^{i gamma_j}| over `samples` random simplex points,
// then polished by pairwise exact line search. Does not use any hull
// geometry; the CLI reports it next to the hull distance.
double sampled_min_overlap(const EigenphaseSpectrum& spectrum, std::size_t samples,
                           unsigned long long seed);

}  // namespace cventlab::discrimination

#endif  // CVENTLAB_DISCRIMINATION_HPP_
