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

// Two-mode Gaussian states described by first and second moments.
//
// Quadratures are x = (a + a^dag)/2 and y = (a - a^dag)/2i, so the vacuum has
// variance 1/4 per quadrature. Vectors and matrices are ordered
// (x1, y1, x2, y2).

#ifndef CVENTLAB_GAUSSIAN_CORE_HPP_
#define CVENTLAB_GAUSSIAN_CORE_HPP_

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cventlab::gaussian {

using Vector4 = Eigen::Matrix<double, 4, 1>;
using Matrix4 = Eigen::Matrix<double, 4, 4>;
using Complex = std::complex<double>;

inline constexpr double kVacuumVariance = 0.25;

enum class Mode { kFirst = 1, kSecond = 2 };
enum class ModeSelection { kFirst = 1, kSecond = 2, kBoth = 3 };

// Twin-beam parameters. The three fields are kept consistent: x = tanh(r0),
// photons = 2 sinh^2(r0) = 2x^2 / (1 - x^2).
struct TwinBeamParams {
  double r0 = 0.0;
  double x = 0.0;
  double photons = 0.0;

  static TwinBeamParams from_squeezing(double r0);
  static TwinBeamParams from_schmidt(double x);
  static TwinBeamParams from_photons(double photons);
};

// Gaussian noise channel: random displacement with complex variance nbar.
struct NoiseParams {
  double nbar = 0.0;
};

class GaussianTwoModeState {
 public:
  // Validates symmetry, positive definiteness and the uncertainty relation
  // cov + (i/4) Omega >= 0. Throws DomainError otherwise.
  GaussianTwoModeState(const Vector4& mean, const Matrix4& cov);

  static GaussianTwoModeState vacuum();

  const Vector4& mean() const { return mean_; }
  const Matrix4& cov() const { return cov_; }

 private:
  struct Unchecked {};
  GaussianTwoModeState(const Vector4& mean, const Matrix4& cov, Unchecked)
      : mean_(mean), cov_(cov) {}

  friend GaussianTwoModeState apply_displacement(const GaussianTwoModeState&,
                                                 Complex, Mode);
  friend GaussianTwoModeState apply_gaussian_noise(const GaussianTwoModeState&,
                                                   NoiseParams, ModeSelection);

  Vector4 mean_;
  Matrix4 cov_;
};

// Zero-mean state whose covariance is diagonal in the normalized EPR
// combinations: (x1+x2)/sqrt2 and (y1-y2)/sqrt2 carry sigma_plus_sq,
// (x1-x2)/sqrt2 and (y1+y2)/sqrt2 carry sigma_minus_sq.
GaussianTwoModeState make_twin_beam_family(double sigma_plus_sq,
                                           double sigma_minus_sq);

// sigma_plus^2 = e^{2 r0}/4, sigma_minus^2 = e^{-2 r0}/4.
GaussianTwoModeState make_twin_beam(const TwinBeamParams& params);

GaussianTwoModeState apply_displacement(const GaussianTwoModeState& state,
                                        Complex alpha, Mode mode);

// Adds nbar/2 to both quadrature variances of each selected mode.
GaussianTwoModeState apply_gaussian_noise(const GaussianTwoModeState& state,
                                          NoiseParams noise,
                                          ModeSelection modes);

// Complex-plane variance (1 - x)/(1 + x) of the joint amplitude for a clean
// twin beam.
double twin_beam_heterodyne_variance(double x);

// Heterodyne detection of the joint amplitude Z = a - b^dag, whose real and
// imaginary parts are x1 - x2 and y1 + y2 (the pair a positive-x twin beam
// squeezes). Only defined for the twin-beam family, i.e. phase-insensitive
// covariances of the form produced by make_twin_beam plus displacements and
// noise; anything else throws UnsupportedState.
struct HeterodyneStatistics {
  Complex mean;
  double variance = 1.0;  // E|z - mean|^2
};
HeterodyneStatistics heterodyne_statistics(const GaussianTwoModeState& state);

double heterodyne_pdf(const GaussianTwoModeState& state, Complex z);

// i.i.d. heterodyne outcomes, deterministic for a given seed.
std::vector<Complex> sample_heterodyne(const GaussianTwoModeState& state,
                                       std::size_t n_samples,
                                       std::uint64_t seed);

// Symplectic eigenvalues (nu_minus, nu_plus) of a two-mode covariance.
std::pair<double, double> symplectic_eigenvalues(const Matrix4& cov);

struct PptResult {
  bool separable = true;
  // Smallest symplectic eigenvalue of the partially transposed covariance;
  // the state is separable iff witness >= 1/4.
  double witness = kVacuumVariance;
};

PptResult ppt_separable(const GaussianTwoModeState& state);

}  // namespace cventlab::gaussian

#endif  // CVENTLAB_GAUSSIAN_CORE_HPP_
