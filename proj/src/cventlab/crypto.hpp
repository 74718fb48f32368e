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

// Secret-key communication with displaced twin beams: Bob knows the random
// displacement key, Eve does not.

#ifndef CVENTLAB_CRYPTO_HPP_
#define CVENTLAB_CRYPTO_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>

namespace cventlab::crypto {

using Complex = std::complex<double>;

// Bits are sent as z1 = a, z0 = -a on the twin beam |x>>, protected by a
// Gaussian random displacement of variance kappa_key.
struct ProtocolConfig {
  double x = 0.0;
  double a = 0.0;
  double kappa_key = 1.0;
  double nbar = 0.0;  // channel noise on both beams
};

// Helstrom error with |<<z1|z0>>|^2 = exp(-|z0 - z1|^2 (1 + N)).
double bob_ideal_error(double x, Complex z0, Complex z1);

// 1/4 exp(-|z0 - z1|^2 (1 + N)).
double bob_ideal_error_asymptote(double x, Complex z0, Complex z1);

// Same protocol on coherent states: |<a1|a0>|^2 = exp(-|a0 - a1|^2).
double coherent_error(Complex alpha0, Complex alpha1);

// A uniformly distributed key averages sigma_1 - sigma_0 to zero, so Eve
// can only guess.
double eve_error_uniform();

// Numeric illustration of the uniform-key case: largest |eigenvalue| of
// sigma_1 - sigma_0 averaged over displacements uniform on a disk of the
// given radius, in truncated Fock space. Shrinks as the disk grows.
struct UniformKeyGrid {
  double step = 0.1;      // lattice spacing of the displacement grid
  int mode1_cutoff = -1;  // chosen from the radius when negative
  int mode2_cutoff = -1;  // chosen from x when negative
};
double eve_uniform_key_residual(double x, double a, double radius, const UniformKeyGrid& grid = {});

// 1/2 [1 - erf(a / sqrt(kappa))]: Eve's optimum against a Gaussian key on a
// maximally entangled channel.
double eve_error_gaussian_key(double a, double kappa_key);
double eve_error_gaussian_key_asymptote(double a, double kappa_key);

// S_+ = erf(a / sqrt(kappa)): total positive part of the averaged
// sigma_1 - sigma_0 for a Gaussian key.
double positive_eigenvalue_sum(double a, double kappa_key);

// Per-quadrature variance of Bob's heterodyne outcome, (1-x)/(2(1+x)).
double receiver_variance(double x);

// (1-x)(1+x)/2, the receiver variance as commonly quoted; kept for
// comparison only, it does not match the heterodyne statistics for x > 0.
double quoted_receiver_variance(double x);

// Sign-threshold heterodyne receiver: 1/2 [1 - erf(a / sqrt(2 sigma_x^2))],
// with channel noise adding nbar to sigma_x^2.
double bob_heterodyne_error(double x, double a, double nbar = 0.0);

// Error of an eavesdropper who thresholds her own heterodyne outcome without
// knowing the key: 1/2 [1 - erf(a / sqrt((1-x)/(1+x) + 2 nbar + kappa))].
// Never below eve_error_gaussian_key.
double eve_heterodyne_error(double x, double a, double kappa_key, double nbar = 0.0);

struct SecurityMargin {
  bool secure = false;  // 2 sigma_x^2 < kappa
  double bob_error = 0.5;
  double eve_error = 0.5;
};
SecurityMargin security_margin(double x, double kappa_key, double a);

// Heterodyne densities for a complex-alphabet symbol z0.
struct AlphabetPdfs {
  Complex center;
  double bob_variance = 1.0;  // (1-x)/(1+x)
  double eve_variance = 1.0;  // (1-x)/(1+x) + kappa

  double bob_pdf(Complex z) const;
  double eve_pdf(Complex z) const;
};
AlphabetPdfs alphabet_pdfs(Complex z0, double x, double kappa_key);

struct ProtocolOutcome {
  std::size_t bits = 0;
  std::size_t bob_errors = 0;
  std::size_t eve_errors = 0;
  double bob_error_rate() const { return bits ? static_cast<double>(bob_errors) / bits : 0.0; }
  double eve_error_rate() const { return bits ? static_cast<double>(eve_errors) / bits : 0.0; }
};

// End-to-end Monte Carlo: random bits, Gaussian key draws, heterodyne
// outcomes. Bob subtracts the key and thresholds on Re z; Eve thresholds
// her own heterodyne outcome without the key. Deterministic in seed.
ProtocolOutcome simulate_binary_protocol(const ProtocolConfig& config, std::size_t n_bits,
                                         std::uint64_t seed);

}  // namespace cventlab::crypto

#endif  // CVENTLAB_CRYPTO_HPP_
