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

#include "cventlab/gaussian_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "cventlab/errors.hpp"

namespace cventlab::gaussian {
namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be finite");
  }
}

}  // namespace

TwinBeamParams TwinBeamParams::from_squeezing(double r0) {
  require_finite(r0, "r0");
  if (r0 < 0.0) throw DomainError("twin beam squeezing r0 must be >= 0");
  const double s = std::sinh(r0);
  return {r0, std::tanh(r0), 2.0 * s * s};
}

TwinBeamParams TwinBeamParams::from_schmidt(double x) {
  require_finite(x, "x");
  if (x < 0.0 || x >= 1.0) throw DomainError("Schmidt parameter x must lie in [0, 1)");
  return {std::atanh(x), x, 2.0 * x * x / (1.0 - x * x)};
}

TwinBeamParams TwinBeamParams::from_photons(double photons) {
  require_finite(photons, "photons");
  if (photons < 0.0) throw DomainError("mean photon number must be >= 0");
  const double r0 = std::asinh(std::sqrt(photons / 2.0));
  return {r0, std::tanh(r0), photons};
}

GaussianTwoModeState::GaussianTwoModeState(const Vector4& mean, const Matrix4& cov)
    : mean_(mean), cov_(cov) {
  if (!mean.allFinite() || !cov.allFinite()) {
    throw DomainError("state moments must be finite");
  }
  const double scale = std::max(1.0, cov.cwiseAbs().maxCoeff());
  if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw DomainError("covariance matrix is not symmetric");
  }
  cov_ = 0.5 * (cov + cov.transpose());
  if (Eigen::LLT<Matrix4>(cov_).info() != Eigen::Success) {
    throw DomainError("covariance matrix is not positive definite");
  }
  const auto [nu_minus, nu_plus] = symplectic_eigenvalues(cov_);
  (void)nu_plus;
  // Strongly squeezed states lose relative accuracy in nu_minus roughly in
  // proportion to the condition number of the covariance.
  const Eigen::SelfAdjointEigenSolver<Matrix4> eig(cov_, Eigen::EigenvaluesOnly);
  const double condition = eig.eigenvalues().maxCoeff() / eig.eigenvalues().minCoeff();
  const double tolerance =
      std::max(1e-10, 16.0 * std::numeric_limits<double>::epsilon() * condition);
  if (nu_minus < kVacuumVariance * (1.0 - tolerance)) {
    throw DomainError("covariance violates the uncertainty relation");
  }
}

GaussianTwoModeState GaussianTwoModeState::vacuum() {
  return GaussianTwoModeState(Vector4::Zero(), kVacuumVariance * Matrix4::Identity(),
                              Unchecked{});
}

GaussianTwoModeState make_twin_beam_family(double sigma_plus_sq, double sigma_minus_sq) {
  require_finite(sigma_plus_sq, "sigma_plus_sq");
  require_finite(sigma_minus_sq, "sigma_minus_sq");
  const double diag = 0.5 * (sigma_plus_sq + sigma_minus_sq);
  const double corr = 0.5 * (sigma_plus_sq - sigma_minus_sq);
  Matrix4 cov = Matrix4::Zero();
  cov(0, 0) = cov(1, 1) = cov(2, 2) = cov(3, 3) = diag;
  cov(0, 2) = cov(2, 0) = corr;
  cov(1, 3) = cov(3, 1) = -corr;
  return GaussianTwoModeState(Vector4::Zero(), cov);
}

GaussianTwoModeState make_twin_beam(const TwinBeamParams& params) {
  if (!(params.r0 >= 0.0)) throw DomainError("twin beam squeezing r0 must be >= 0");
  const double plus = 0.25 * std::exp(2.0 * params.r0);
  const double minus = 0.25 * std::exp(-2.0 * params.r0);
  return make_twin_beam_family(plus, minus);
}

GaussianTwoModeState apply_displacement(const GaussianTwoModeState& state, Complex alpha,
                                        Mode mode) {
  int offset = 0;
  switch (mode) {
    case Mode::kFirst: offset = 0; break;
    case Mode::kSecond: offset = 2; break;
    default: throw InvalidArgument("mode must be 1 or 2");
  }
  Vector4 mean = state.mean();
  mean(offset) += alpha.real();
  mean(offset + 1) += alpha.imag();
  return GaussianTwoModeState(mean, state.cov(), GaussianTwoModeState::Unchecked{});
}

GaussianTwoModeState apply_gaussian_noise(const GaussianTwoModeState& state, NoiseParams noise,
                                          ModeSelection modes) {
  require_finite(noise.nbar, "nbar");
  if (noise.nbar < 0.0) throw DomainError("noise nbar must be >= 0");
  const auto sel = static_cast<int>(modes);
  if (sel < 1 || sel > 3) throw InvalidArgument("mode selection must be 1, 2 or both");
  Matrix4 cov = state.cov();
  const double per_quadrature = 0.5 * noise.nbar;
  if (sel & 1) {
    cov(0, 0) += per_quadrature;
    cov(1, 1) += per_quadrature;
  }
  if (sel & 2) {
    cov(2, 2) += per_quadrature;
    cov(3, 3) += per_quadrature;
  }
  return GaussianTwoModeState(state.mean(), cov, GaussianTwoModeState::Unchecked{});
}

double twin_beam_heterodyne_variance(double x) {
  require_finite(x, "x");
  if (x < 0.0 || x >= 1.0) throw DomainError("Schmidt parameter x must lie in [0, 1)");
  return (1.0 - x) / (1.0 + x);
}

HeterodyneStatistics heterodyne_statistics(const GaussianTwoModeState& state) {
  const Matrix4& v = state.cov();
  const double tol = 1e-12 * std::max(1.0, v.cwiseAbs().maxCoeff());
  const bool family = std::abs(v(0, 0) - v(1, 1)) <= tol && std::abs(v(2, 2) - v(3, 3)) <= tol &&
                      std::abs(v(0, 2) + v(1, 3)) <= tol && std::abs(v(0, 1)) <= tol &&
                      std::abs(v(2, 3)) <= tol && std::abs(v(0, 3)) <= tol &&
                      std::abs(v(1, 2)) <= tol;
  if (!family) {
    throw UnsupportedState("heterodyne statistics are only defined for twin-beam family states");
  }
  const Vector4& m = state.mean();
  const double var_re = v(0, 0) + v(2, 2) - 2.0 * v(0, 2);
  const double var_im = v(1, 1) + v(3, 3) + 2.0 * v(1, 3);
  return {Complex(m(0) - m(2), m(1) + m(3)), var_re + var_im};
}

double heterodyne_pdf(const GaussianTwoModeState& state, Complex z) {
  const auto stats = heterodyne_statistics(state);
  return std::exp(-std::norm(z - stats.mean) / stats.variance) /
         (std::numbers::pi * stats.variance);
}

std::vector<Complex> sample_heterodyne(const GaussianTwoModeState& state, std::size_t n_samples,
                                       std::uint64_t seed) {
  if (n_samples == 0) throw InvalidArgument("n_samples must be >= 1");
  const auto stats = heterodyne_statistics(state);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5 * stats.variance));
  std::vector<Complex> out;
  out.reserve(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    out.emplace_back(stats.mean.real() + re, stats.mean.imag() + im);
  }
  return out;
}

std::pair<double, double> symplectic_eigenvalues(const Matrix4& cov) {
  // The eigenvalues of i*Omega*V are +-nu. With V = L L^T the Hermitian
  // matrix L^T (i*Omega) L has the same spectrum and keeps the small
  // eigenvalue accurate for strongly squeezed states.
  Eigen::LLT<Matrix4> llt(cov);
  if (llt.info() != Eigen::Success) {
    throw DomainError("covariance matrix is not positive definite");
  }
  const Matrix4 lower = llt.matrixL();
  Eigen::Matrix4cd omega = Eigen::Matrix4cd::Zero();
  omega(0, 1) = omega(2, 3) = Complex(0.0, 1.0);
  omega(1, 0) = omega(3, 2) = Complex(0.0, -1.0);
  const Eigen::Matrix4cd h = lower.transpose().cast<Complex>() * omega * lower.cast<Complex>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(h, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();  // ascending: -nu+, -nu-, nu-, nu+
  const double nu_minus = 0.5 * (ev(2) - ev(1));
  const double nu_plus = 0.5 * (ev(3) - ev(0));
  return {nu_minus, nu_plus};
}

PptResult ppt_separable(const GaussianTwoModeState& state) {
  // Partial transposition flips the sign of y2.
  Matrix4 flip = Matrix4::Identity();
  flip(3, 3) = -1.0;
  const Matrix4 transposed = flip * state.cov() * flip;
  const double witness = symplectic_eigenvalues(transposed).first;
  // Product pure states sit exactly on the bound; allow for the rounding of
  // the eigen decomposition there.
  return {witness >= kVacuumVariance * (1.0 - 1e-12), witness};
}

}  // namespace cventlab::gaussian
