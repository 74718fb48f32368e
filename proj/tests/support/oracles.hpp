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

// Independent reference computations shared by the test suites. Nothing
// here calls into the library.

#ifndef CVENTLAB_TESTS_SUPPORT_ORACLES_HPP_
#define CVENTLAB_TESTS_SUPPORT_ORACLES_HPP_

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>


namespace oracle {

using Complex = std::complex<double>;

// Two-mode squeezer acting on vacuum quadratures (x1, y1, x2, y2), written
// directly as a symplectic matrix.
inline Eigen::Matrix4d two_mode_squeezed_cov(double r) {
  const double c = std::cosh(r), s = std::sinh(r);
  Eigen::Matrix4d S;
  S << c, 0, s, 0,
       0, c, 0, -s,
       s, 0, c, 0,
       0, -s, 0, c;
  return S * (0.25 * Eigen::Matrix4d::Identity()) * S.transpose();
}

inline Eigen::Matrix4d symplectic_form() {
  Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
  omega(0, 1) = omega(2, 3) = 1.0;
  omega(1, 0) = omega(3, 2) = -1.0;
  return omega;
}

// Annihilation operator on {|0>, ..., |cutoff>}.
inline Eigen::MatrixXcd annihilation(int cutoff) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1);
  for (int n = 1; n <= cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

// Kronecker product for index p * (cutoff + 1) + q, i.e. |p>_1 |q>_2.
inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// exp(i phi (a^dag b + a b^dag)) as one dense matrix exponential.
inline Eigen::MatrixXcd beam_splitter_unitary(double phi, int cutoff) {
  const Eigen::MatrixXcd a = annihilation(cutoff);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(cutoff + 1, cutoff + 1);
  const Eigen::MatrixXcd A = kron(a, id);
  const Eigen::MatrixXcd B = kron(id, a);
  const Eigen::MatrixXcd G = A.adjoint() * B + A * B.adjoint();
  const Eigen::MatrixXcd gen = Complex(0.0, phi) * G;
  return gen.exp();
}

// exp(beta a^dag - conj(beta) a) on a generous truncation.
inline Eigen::MatrixXcd displacement_unitary(Complex beta, int cutoff) {
  const Eigen::MatrixXcd a = annihilation(cutoff);
  const Eigen::MatrixXcd gen = beta * a.adjoint() - std::conj(beta) * a;
  return gen.exp();
}

inline Eigen::VectorXcd flatten(const Eigen::MatrixXcd& amps) {
  Eigen::VectorXcd v(amps.size());
  for (Eigen::Index p = 0; p < amps.rows(); ++p) {
    for (Eigen::Index q = 0; q < amps.cols(); ++q) v(p * amps.cols() + q) = amps(p, q);
  }
  return v;
}

// Distance from the origin to the convex hull of unit-circle points, by
// duality: r = max(0, max_theta min_j cos(gamma_j - theta)). The maximum of
// the lower envelope sits either on a single phase or where two cosines
// cross, so enumerating those directions is exact.
inline double hull_distance_dual(const std::vector<double>& phases) {
  const auto support = [&](double theta) {
    double m = 1.0;
    for (double g : phases) m = std::min(m, std::cos(g - theta));
    return m;
  };
  double best = -2.0;
  for (std::size_t i = 0; i < phases.size(); ++i) {
    best = std::max(best, support(phases[i]));
    for (std::size_t j = i + 1; j < phases.size(); ++j) {
      const double mid = 0.5 * (phases[i] + phases[j]);
      best = std::max({best, support(mid), support(mid + std::numbers::pi)});
    }
  }
  return std::max(0.0, best);
}

}  // namespace oracle

#endif  // CVENTLAB_TESTS_SUPPORT_ORACLES_HPP_
