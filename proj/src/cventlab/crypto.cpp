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

#include "cventlab/crypto.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "cventlab/errors.hpp"
#include "cventlab/fock_oracle.hpp"
#include "cventlab/gaussian_core.hpp"

namespace cventlab::crypto {
namespace {

double helstrom(double overlap_sq) {
  return 0.5 * overlap_sq / (1.0 + std::sqrt(std::max(0.0, 1.0 - overlap_sq)));
}

double photons_for(double x) { return gaussian::TwinBeamParams::from_schmidt(x).photons; }

void require_key(double kappa_key) {
  if (!(kappa_key > 0.0) || !std::isfinite(kappa_key)) throw DomainError("kappa_key must be > 0");
}

void require_amplitude(double a) {
  if (!(a >= 0.0) || !std::isfinite(a)) throw DomainError("symbol amplitude a must be >= 0");
}

}  // namespace

double bob_ideal_error(double x, Complex z0, Complex z1) {
  return helstrom(std::exp(-std::norm(z0 - z1) * (1.0 + photons_for(x))));
}

double bob_ideal_error_asymptote(double x, Complex z0, Complex z1) {
  return 0.25 * std::exp(-std::norm(z0 - z1) * (1.0 + photons_for(x)));
}

double coherent_error(Complex alpha0, Complex alpha1) {
  return helstrom(std::exp(-std::norm(alpha0 - alpha1)));
}

double eve_error_uniform() { return 0.5; }

double eve_uniform_key_residual(double x, double a, double radius, const UniformKeyGrid& grid) {
  if (!(x >= 0.0 && x < 1.0)) throw DomainError("x must lie in [0, 1)");
  require_amplitude(a);
  if (!(radius > 0.0) || !(grid.step > 0.0)) throw DomainError("radius and step must be > 0");

  const int cut2 = grid.mode2_cutoff >= 0 ? grid.mode2_cutoff : fock::default_cutoff(x, 1e-6);
  const double reach = radius + a + grid.step;
  const int cut1 = grid.mode1_cutoff >= 0
                       ? grid.mode1_cutoff
                       : static_cast<int>(std::ceil(reach * reach + 8.0 * reach + 20.0));
  if (cut1 < cut2) throw InvalidArgument("mode 1 cutoff must cover the twin-beam support");

  std::vector<double> schmidt(cut2 + 1);
  for (int p = 0; p <= cut2; ++p) schmidt[p] = std::sqrt(1.0 - x * x) * std::pow(x, p);

  // sigma_j displaced by alpha is the twin beam displaced by beta = alpha + z_j, so
  // the average over |alpha| < R is a signed average over the two shifted disks.
  const Complex z1(a, 0.0), z0(-a, 0.0);
  const int half = static_cast<int>(std::ceil(reach / grid.step));
  std::vector<Complex> points;
  std::vector<double> signs;
  for (int i = -half; i < half; ++i) {
    for (int j = -half; j < half; ++j) {
      const Complex beta((i + 0.5) * grid.step, (j + 0.5) * grid.step);
      const int in1 = std::abs(beta - z1) < radius ? 1 : 0;
      const int in0 = std::abs(beta - z0) < radius ? 1 : 0;
      if (in1 != in0) {
        points.push_back(beta);
        signs.push_back(in1 - in0);
      }
    }
  }
  const Eigen::Index dim = static_cast<Eigen::Index>(cut1 + 1) * (cut2 + 1);
  if (points.empty()) return 0.0;

  const double weight = grid.step * grid.step / (std::numbers::pi * radius * radius);
  Eigen::MatrixXcd vecs(dim, static_cast<Eigen::Index>(points.size()));
  for (std::size_t k = 0; k < points.size(); ++k) {
    const Eigen::MatrixXcd d = fock::displacement_matrix(points[k], cut1, cut2 + 1);
    // Index (m, p) -> m + (cut1 + 1) p for |m>_1 |p>_2.
    for (int p = 0; p <= cut2; ++p) {
      vecs.col(static_cast<Eigen::Index>(k)).segment(static_cast<Eigen::Index>(p) * (cut1 + 1),
                                                     cut1 + 1) = schmidt[p] * d.col(p);
    }
  }
  Eigen::MatrixXcd signed_vecs = vecs;
  for (std::size_t k = 0; k < points.size(); ++k) {
    signed_vecs.col(static_cast<Eigen::Index>(k)) *= signs[k] * weight;
  }
  const Eigen::MatrixXcd lambda = signed_vecs * vecs.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(lambda, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

double eve_error_gaussian_key(double a, double kappa_key) {
  require_amplitude(a);
  require_key(kappa_key);
  return 0.5 * std::erfc(a / std::sqrt(kappa_key));
}

double eve_error_gaussian_key_asymptote(double a, double kappa_key) {
  require_amplitude(a);
  require_key(kappa_key);
  if (a == 0.0) return 0.5;
  return std::sqrt(kappa_key) / (2.0 * a * std::sqrt(std::numbers::pi)) *
         std::exp(-a * a / kappa_key);
}

double positive_eigenvalue_sum(double a, double kappa_key) {
  require_amplitude(a);
  require_key(kappa_key);
  return std::erf(a / std::sqrt(kappa_key));
}

double receiver_variance(double x) { return 0.5 * gaussian::twin_beam_heterodyne_variance(x); }

double quoted_receiver_variance(double x) {
  if (!(x >= 0.0 && x < 1.0)) throw DomainError("x must lie in [0, 1)");
  return 0.5 * (1.0 - x) * (1.0 + x);
}

double bob_heterodyne_error(double x, double a, double nbar) {
  require_amplitude(a);
  if (!(nbar >= 0.0)) throw DomainError("nbar must be >= 0");
  const double sigma_sq = receiver_variance(x) + nbar;
  return 0.5 * std::erfc(a / std::sqrt(2.0 * sigma_sq));
}

double eve_heterodyne_error(double x, double a, double kappa_key, double nbar) {
  require_amplitude(a);
  require_key(kappa_key);
  if (!(nbar >= 0.0)) throw DomainError("nbar must be >= 0");
  const double variance = gaussian::twin_beam_heterodyne_variance(x) + 2.0 * nbar + kappa_key;
  return 0.5 * std::erfc(a / std::sqrt(variance));
}

SecurityMargin security_margin(double x, double kappa_key, double a) {
  require_key(kappa_key);
  SecurityMargin m;
  m.secure = 2.0 * receiver_variance(x) < kappa_key;
  m.bob_error = bob_heterodyne_error(x, a);
  m.eve_error = eve_error_gaussian_key(a, kappa_key);
  return m;
}

double AlphabetPdfs::bob_pdf(Complex z) const {
  return std::exp(-std::norm(z - center) / bob_variance) / (std::numbers::pi * bob_variance);
}

double AlphabetPdfs::eve_pdf(Complex z) const {
  return std::exp(-std::norm(z - center) / eve_variance) / (std::numbers::pi * eve_variance);
}

AlphabetPdfs alphabet_pdfs(Complex z0, double x, double kappa_key) {
  if (!(kappa_key >= 0.0)) throw DomainError("kappa_key must be >= 0");
  const double bob = gaussian::twin_beam_heterodyne_variance(x);
  return {z0, bob, bob + kappa_key};
}

ProtocolOutcome simulate_binary_protocol(const ProtocolConfig& config, std::size_t n_bits,
                                         std::uint64_t seed) {
  require_amplitude(config.a);
  require_key(config.kappa_key);
  if (n_bits == 0) throw InvalidArgument("n_bits must be >= 1");

  auto channel = gaussian::make_twin_beam(gaussian::TwinBeamParams::from_schmidt(config.x));
  channel = gaussian::apply_gaussian_noise(channel, {config.nbar}, gaussian::ModeSelection::kBoth);
  const double outcome_variance = gaussian::heterodyne_statistics(channel).variance;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> key(0.0, std::sqrt(0.5 * config.kappa_key));
  std::normal_distribution<double> noise(0.0, std::sqrt(0.5 * outcome_variance));

  ProtocolOutcome out;
  out.bits = n_bits;
  for (std::size_t i = 0; i < n_bits; ++i) {
    const bool bit = (rng() & 1U) != 0;
    const Complex symbol(bit ? config.a : -config.a, 0.0);
    const double key_re = key(rng);
    const double key_im = key(rng);
    const Complex alpha(key_re, key_im);
    const double bob_re = noise(rng);
    const double bob_im = noise(rng);
    const double eve_re = noise(rng);
    const double eve_im = noise(rng);
    const Complex bob_outcome = symbol + alpha + Complex(bob_re, bob_im);
    const Complex eve_outcome = symbol + alpha + Complex(eve_re, eve_im);
    const bool bob_guess = (bob_outcome - alpha).real() >= 0.0;
    const bool eve_guess = eve_outcome.real() >= 0.0;
    out.bob_errors += bob_guess != bit ? 1 : 0;
    out.eve_errors += eve_guess != bit ? 1 : 0;
  }
  return out;
}

}  // namespace cventlab::crypto
