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

// Truncated two-mode Fock space, used as a brute-force cross-check for the
// closed-form Gaussian results.

#ifndef CVENTLAB_FOCK_ORACLE_HPP_
#define CVENTLAB_FOCK_ORACLE_HPP_

#include <Eigen/Dense>
#include <complex>

namespace cventlab::fock {

using Complex = std::complex<double>;

// amplitudes()(p, q) = <p, q|psi>. The storage is square with side
// `max_photons() + 1`; every total-photon-number block with p + q <=
// max_photons() is complete, so beam-splitter evolution can act on it
// exactly.
class FockTwoModeState {
 public:
  explicit FockTwoModeState(Eigen::MatrixXcd amplitudes, double truncation_tail = 0.0);

  const Eigen::MatrixXcd& amplitudes() const { return amps_; }
  int max_photons() const { return static_cast<int>(amps_.rows()) - 1; }
  // Probability mass known to be missing from the truncated state.
  double truncation_tail() const { return tail_; }
  double norm_squared() const { return amps_.squaredNorm(); }

 private:
  Eigen::MatrixXcd amps_;
  double tail_;
};

// x^{2(d_max+1)}: probability mass of the twin beam above p = d_max.
double twin_beam_tail(double x, int d_max);

// Smallest d_max whose twin-beam tail is <= tail_tolerance.
int default_cutoff(double x, double tail_tolerance = 1e-12);

// sqrt(1-x^2) x^p on |p, p> for p <= d_max. Storage side is 2*d_max + 1 so
// the result stays closed under apply_jx_evolution.
FockTwoModeState twin_beam_fock(double x, int d_max);

// exp(i phi (a^dag b + a b^dag)), applied block by block on fixed total
// photon number. The generator is twice the Schwinger J_x; with this
// normalization the twin-beam overlap is [1 + N(N+2) sin^2 phi]^{-1}.
// Throws TruncationError if the state has weight in an incomplete block.
FockTwoModeState apply_jx_evolution(const FockTwoModeState& state, double phi);

// sum conj(a) * b. Throws InvalidArgument on shape mismatch.
Complex overlap(const FockTwoModeState& a, const FockTwoModeState& b);

// Probability of a zero photocount difference: sum_n |amps(n, n)|^2.
double zero_difference_probability(const FockTwoModeState& state);

// sum_{p != q} |amps(p, q)|^2, computed without cancellation.
double nonzero_difference_probability(const FockTwoModeState& state);

// Entries <m|D(beta)|n> for m, n <= cutoff. Each column is built with the
// exact recursion D|n+1> = (a^dag - conj(beta)) D|n> / sqrt(n+1), so the
// returned entries carry no truncation error. `columns` limits the number
// of columns built (all of them when negative).
Eigen::MatrixXcd displacement_matrix(Complex beta, int cutoff, int columns = -1);

// Displaces one mode (1 or 2). Amplitude pushed above the storage cutoff is
// dropped and added to the reported tail.
FockTwoModeState apply_displacement(const FockTwoModeState& state, Complex beta, int mode);

// <x1>, <y1>, <x2>, <y2> with x = (a + a^dag)/2.
Eigen::Vector4d quadrature_means(const FockTwoModeState& state);

}  // namespace cventlab::fock

#endif  // CVENTLAB_FOCK_ORACLE_HPP_
