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

#include "cventlab/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "cventlab/errors.hpp"

namespace cventlab::fock {

FockTwoModeState::FockTwoModeState(Eigen::MatrixXcd amplitudes, double truncation_tail)
    : amps_(std::move(amplitudes)), tail_(truncation_tail) {
  if (amps_.rows() == 0 || amps_.rows() != amps_.cols()) {
    throw InvalidArgument("Fock amplitudes must be a non-empty square matrix");
  }
}

double twin_beam_tail(double x, int d_max) {
  if (!(x >= 0.0 && x < 1.0)) throw DomainError("Schmidt parameter x must lie in [0, 1)");
  if (d_max < 0) throw InvalidArgument("d_max must be >= 0");
  if (x == 0.0) return 0.0;
  return std::exp(2.0 * (d_max + 1) * std::log(x));
}

int default_cutoff(double x, double tail_tolerance) {
  if (!(x >= 0.0 && x < 1.0)) throw DomainError("Schmidt parameter x must lie in [0, 1)");
  if (!(tail_tolerance > 0.0 && tail_tolerance < 1.0)) {
    throw InvalidArgument("tail tolerance must lie in (0, 1)");
  }
  if (x == 0.0) return 0;
  const double needed = std::log(tail_tolerance) / (2.0 * std::log(x)) - 1.0;
  int d = std::max(0, static_cast<int>(std::ceil(needed)));
  while (d > 0 && twin_beam_tail(x, d - 1) <= tail_tolerance) --d;
  while (twin_beam_tail(x, d) > tail_tolerance) ++d;
  return d;
}

FockTwoModeState twin_beam_fock(double x, int d_max) {
  const double tail = twin_beam_tail(x, d_max);
  const int side = 2 * d_max + 1;
  Eigen::MatrixXcd amps = Eigen::MatrixXcd::Zero(side, side);
  double amp = std::sqrt(1.0 - x * x);
  for (int p = 0; p <= d_max; ++p) {
    amps(p, p) = amp;
    amp *= x;
  }
  return FockTwoModeState(std::move(amps), tail);
}

FockTwoModeState apply_jx_evolution(const FockTwoModeState& state, double phi) {
  const Eigen::MatrixXcd& in = state.amplitudes();
  const int cut = state.max_photons();
  for (int p = 0; p <= cut; ++p) {
    for (int q = cut - p + 1; q <= cut; ++q) {
      if (in(p, q) != Complex(0.0, 0.0)) {
        throw TruncationError("state has weight in an incomplete photon-number block",
                              2 * cut);
      }
    }
  }

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(in.rows(), in.cols());
  for (int n = 0; n <= cut; ++n) {
    // Block basis |k, n-k>, k = 0..n.
    Eigen::VectorXcd block(n + 1);
    for (int k = 0; k <= n; ++k) block(k) = in(k, n - k);
    if (block.squaredNorm() == 0.0) continue;
    if (n == 0) {
      out(0, 0) = block(0);
      continue;
    }
    // a^dag b + a b^dag is real, symmetric and tridiagonal in this basis.
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n + 1);
    Eigen::VectorXd sub(n);
    for (int k = 0; k < n; ++k) sub(k) = std::sqrt(static_cast<double>(k + 1) * (n - k));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    const Eigen::MatrixXd& vecs = solver.eigenvectors();
    Eigen::VectorXcd coeffs = vecs.transpose().cast<Complex>() * block;
    for (int j = 0; j <= n; ++j) {
      coeffs(j) *= std::polar(1.0, phi * solver.eigenvalues()(j));
    }
    const Eigen::VectorXcd evolved = vecs.cast<Complex>() * coeffs;
    for (int k = 0; k <= n; ++k) out(k, n - k) = evolved(k);
  }
  return FockTwoModeState(std::move(out), state.truncation_tail());
}

Complex overlap(const FockTwoModeState& a, const FockTwoModeState& b) {
  if (a.amplitudes().rows() != b.amplitudes().rows()) {
    throw InvalidArgument("overlap requires states with equal truncation");
  }
  return (a.amplitudes().conjugate().cwiseProduct(b.amplitudes())).sum();
}

double zero_difference_probability(const FockTwoModeState& state) {
  return state.amplitudes().diagonal().squaredNorm();
}

double nonzero_difference_probability(const FockTwoModeState& state) {
  const Eigen::MatrixXcd& amps = state.amplitudes();
  double total = 0.0;
  for (Eigen::Index q = 0; q < amps.cols(); ++q) {
    for (Eigen::Index p = 0; p < amps.rows(); ++p) {
      if (p != q) total += std::norm(amps(p, q));
    }
  }
  return total;
}

Eigen::MatrixXcd displacement_matrix(Complex beta, int cutoff, int columns) {
  if (cutoff < 0) throw InvalidArgument("cutoff must be >= 0");
  const int side = cutoff + 1;
  const int cols = columns < 0 ? side : std::min(columns, side);
  if (cols == 0) throw InvalidArgument("columns must be >= 1");
  Eigen::MatrixXcd d(side, cols);
  // Column 0 is the coherent state |beta>.
  Complex amp = std::exp(-0.5 * std::norm(beta));
  for (int m = 0; m < side; ++m) {
    d(m, 0) = amp;
    amp *= beta / std::sqrt(static_cast<double>(m + 1));
  }
  const Complex shift = std::conj(beta);
  for (int n = 0; n + 1 < cols; ++n) {
    const double inv = 1.0 / std::sqrt(static_cast<double>(n + 1));
    for (int m = 0; m < side; ++m) {
      const Complex raised = m > 0 ? std::sqrt(static_cast<double>(m)) * d(m - 1, n) : 0.0;
      d(m, n + 1) = (raised - shift * d(m, n)) * inv;
    }
  }
  return d;
}

FockTwoModeState apply_displacement(const FockTwoModeState& state, Complex beta, int mode) {
  if (mode != 1 && mode != 2) throw InvalidArgument("mode must be 1 or 2");
  const Eigen::MatrixXcd d = displacement_matrix(beta, state.max_photons());
  const double before = state.norm_squared();
  Eigen::MatrixXcd out = mode == 1 ? Eigen::MatrixXcd(d * state.amplitudes())
                                   : Eigen::MatrixXcd(state.amplitudes() * d.transpose());
  const double lost = std::max(0.0, before - out.squaredNorm());
  return FockTwoModeState(std::move(out), state.truncation_tail() + lost);
}

Eigen::Vector4d quadrature_means(const FockTwoModeState& state) {
  const Eigen::MatrixXcd& amps = state.amplitudes();
  Complex a_mean = 0.0;
  Complex b_mean = 0.0;
  for (Eigen::Index p = 0; p < amps.rows(); ++p) {
    for (Eigen::Index q = 0; q < amps.cols(); ++q) {
      if (p + 1 < amps.rows()) {
        a_mean += std::conj(amps(p, q)) * std::sqrt(static_cast<double>(p + 1)) * amps(p + 1, q);
      }
      if (q + 1 < amps.cols()) {
        b_mean += std::conj(amps(p, q)) * std::sqrt(static_cast<double>(q + 1)) * amps(p, q + 1);
      }
    }
  }
  // <x> = Re<a>, <y> = Im<a> for x = (a + a^dag)/2.
  return {a_mean.real(), a_mean.imag(), b_mean.real(), b_mean.imag()};
}

}  // namespace cventlab::fock
