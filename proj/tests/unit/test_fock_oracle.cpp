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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cventlab/errors.hpp"
#include "oracles.hpp"

namespace cventlab::fock {
namespace {

constexpr double kPi = std::numbers::pi;

// Random state supported on total photon numbers <= max_total, stored on a
// side x side grid.
FockTwoModeState random_state(int side, int max_total, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Eigen::MatrixXcd amps = Eigen::MatrixXcd::Zero(side, side);
  for (int p = 0; p < side; ++p) {
    for (int q = 0; p + q <= max_total && q < side; ++q) amps(p, q) = Complex(g(rng), g(rng));
  }
  amps /= amps.norm();
  return FockTwoModeState(amps);
}

double closed_overlap_sq(double x, double phi) {
  const double n = 2 * x * x / (1 - x * x);
  return 1.0 / (1.0 + n * (n + 2) * std::pow(std::sin(phi), 2));
}

TEST(TwinBeamFock, VacuumAtZeroSchmidt) {
  const auto s = twin_beam_fock(0.0, 5);
  EXPECT_EQ(s.amplitudes()(0, 0), Complex(1.0, 0.0));
  EXPECT_EQ(s.norm_squared(), 1.0);
  EXPECT_EQ(s.truncation_tail(), 0.0);
}

TEST(TwinBeamFock, TailIsGeometric) {
  const auto s = twin_beam_fock(0.5, 10);
  EXPECT_NEAR(s.truncation_tail(), std::pow(0.5, 22), 1e-22);
  EXPECT_NEAR(s.truncation_tail(), 2.4e-7, 0.1e-7);
  EXPECT_NEAR(1.0 - s.norm_squared(), s.truncation_tail(), 1e-15);
  for (double x : {0.1, 0.6, 0.95}) {
    for (int d : {0, 3, 20}) {
      double kept = 0.0;
      for (int p = 0; p <= d; ++p) kept += (1 - x * x) * std::pow(x, 2 * p);
      EXPECT_NEAR(twin_beam_tail(x, d), 1.0 - kept, 1e-14);
    }
  }
}

TEST(TwinBeamFock, ThermalMarginal) {
  const double x = 0.7;
  const auto s = twin_beam_fock(x, 30);
  const auto& a = s.amplitudes();
  for (int n = 0; n <= 30; ++n) {
    double marginal = 0.0;
    for (Eigen::Index q = 0; q < a.cols(); ++q) marginal += std::norm(a(n, q));
    EXPECT_NEAR(marginal, (1 - x * x) * std::pow(x, 2 * n), 1e-15);
  }
}

TEST(TwinBeamFock, DefaultCutoffMeetsTolerance) {
  for (double x : {0.1, 0.5, 0.9, 0.99}) {
    for (double tol : {1e-6, 1e-10, 1e-14}) {
      const int d = default_cutoff(x, tol);
      EXPECT_LE(twin_beam_tail(x, d), tol);
      if (d > 0) EXPECT_GT(twin_beam_tail(x, d - 1), tol);
    }
  }
  EXPECT_THROW(twin_beam_fock(1.0, 3), DomainError);
  EXPECT_THROW(twin_beam_fock(0.5, -1), InvalidArgument);
}

TEST(JxEvolution, ZeroPhaseIsIdentity) {
  const auto s = random_state(9, 8, 1);
  const auto e = apply_jx_evolution(s, 0.0);
  EXPECT_LE((e.amplitudes() - s.amplitudes()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(JxEvolution, SinglePhotonRotation) {
  Eigen::MatrixXcd amps = Eigen::MatrixXcd::Zero(2, 2);
  amps(1, 0) = 1.0;
  const FockTwoModeState one_zero(amps);
  // By hand: the generator is the Pauli x matrix on {|1,0>, |0,1>}, so
  // exp(i phi X) = cos(phi) + i sin(phi) X.
  for (double phi : {0.3, kPi / 2, kPi}) {
    const auto e = apply_jx_evolution(one_zero, phi).amplitudes();
    EXPECT_NEAR(std::abs(e(1, 0) - std::cos(phi)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(e(0, 1) - Complex(0.0, std::sin(phi))), 0.0, 1e-15);
  }
  // A quarter turn of this generator sends |1,0> to i|0,1>.
  const auto q = apply_jx_evolution(one_zero, kPi / 2).amplitudes();
  EXPECT_NEAR(std::abs(q(0, 1) - Complex(0.0, 1.0)), 0.0, 1e-15);
}

TEST(JxEvolution, MatchesDenseMatrixExponential) {
  const int side = 7;
  const auto s = random_state(side, side - 1, 42);
  for (double phi : {0.17, 1.1, 2.9}) {
    const Eigen::MatrixXcd u = oracle::beam_splitter_unitary(phi, side - 1);
    const Eigen::VectorXcd ref = u * oracle::flatten(s.amplitudes());
    const Eigen::VectorXcd got = oracle::flatten(apply_jx_evolution(s, phi).amplitudes());
    EXPECT_LE((ref - got).cwiseAbs().maxCoeff(), 1e-12) << phi;
  }
}

TEST(JxEvolution, ConservesEachPhotonNumberBlock) {
  const int side = 13;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = random_state(side, side - 1, seed);
    const auto e = apply_jx_evolution(s, 0.37 * static_cast<double>(seed + 1));
    for (int n = 0; n < 2 * side - 1; ++n) {
      double before = 0.0, after = 0.0;
      for (int p = std::max(0, n - side + 1); p <= std::min(n, side - 1); ++p) {
        before += std::norm(s.amplitudes()(p, n - p));
        after += std::norm(e.amplitudes()(p, n - p));
      }
      EXPECT_NEAR(before, after, 1e-12) << "block " << n;
      if (before == 0.0) EXPECT_EQ(after, 0.0);
    }
  }
}

TEST(JxEvolution, RejectsWeightInIncompleteBlock) {
  Eigen::MatrixXcd amps = Eigen::MatrixXcd::Zero(4, 4);
  amps(3, 2) = 1.0;
  try {
    apply_jx_evolution(FockTwoModeState(amps), 0.1);
    FAIL() << "expected TruncationError";
  } catch (const TruncationError& e) {
    EXPECT_GT(e.suggested_cutoff(), 3);
  }
}

TEST(Overlap, SelfOverlapAndSymmetry) {
  const auto s = twin_beam_fock(0.8, 25);
  EXPECT_NEAR(overlap(s, s).real(), 1.0 - s.truncation_tail(), 1e-14);
  const auto a = random_state(6, 5, 3);
  const auto b = random_state(6, 5, 4);
  EXPECT_NEAR(std::abs(overlap(a, b) - std::conj(overlap(b, a))), 0.0, 1e-15);
}

TEST(Overlap, OrthogonalFockStates) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(3, 3), b = a;
  a(1, 0) = 1.0;
  b(0, 1) = 1.0;
  EXPECT_EQ(overlap(FockTwoModeState(a), FockTwoModeState(b)), Complex(0.0, 0.0));
  EXPECT_THROW(overlap(FockTwoModeState(a), FockTwoModeState(Eigen::MatrixXcd::Zero(4, 4))),
               InvalidArgument);
}

TEST(Overlap, TwinBeamPerturbationClosedForm) {
  const double x = 0.6, phi = 0.3;
  const int d = default_cutoff(x, 1e-12);
  const auto s = twin_beam_fock(x, d);
  const double got = std::norm(overlap(s, apply_jx_evolution(s, phi)));
  EXPECT_NEAR(got, closed_overlap_sq(x, phi), 1e-8);
}

TEST(ZeroDifference, UnperturbedAndVacuum) {
  const auto s = twin_beam_fock(0.5, 20);
  EXPECT_NEAR(zero_difference_probability(s), 1.0 - s.truncation_tail(), 1e-15);
  EXPECT_EQ(nonzero_difference_probability(s), 0.0);
  for (double phi : {0.1, 1.0, 2.5}) {
    EXPECT_NEAR(zero_difference_probability(apply_jx_evolution(twin_beam_fock(0.0, 3), phi)), 1.0,
                1e-15);
  }
}

TEST(ZeroDifference, SmallPhaseExpansion) {
  // The generator has zero mean on the twin beam and maps it into the
  // odd-difference sector, so 1 - P(d = 0) = phi^2 <G^2> + O(phi^4) with
  // <G^2> = N(N+2).
  const double x = 0.5, n = 2 * x * x / (1 - x * x);
  const auto s = twin_beam_fock(x, default_cutoff(x, 1e-14));
  // G|p,p> = sqrt(p(p+1)) (|p+1,p-1> + |p-1,p+1>), and these images are
  // orthogonal for different p.
  double g2 = 0.0;
  const auto& a = s.amplitudes();
  for (int p = 0; p + 1 < a.rows(); ++p) g2 += std::norm(a(p, p)) * 2.0 * p * (p + 1);
  EXPECT_NEAR(g2, n * (n + 2), 1e-10);
  for (double phi : {0.05, 0.02}) {
    const double p_nonzero = nonzero_difference_probability(apply_jx_evolution(s, phi));
    EXPECT_NEAR(p_nonzero / (phi * phi), n * (n + 2), 2.0 * phi * phi * n * (n + 2) * (n + 4));
  }
}

TEST(DisplacementMatrix, MatchesDenseExponential) {
  for (const Complex beta : {Complex(0.3, 0.0), Complex(-1.1, 0.7), Complex(0.0, 2.0)}) {
    const Eigen::MatrixXcd ref = oracle::displacement_unitary(beta, 90);
    const Eigen::MatrixXcd got = displacement_matrix(beta, 20);
    EXPECT_LE((ref.topLeftCorner(21, 21) - got).cwiseAbs().maxCoeff(), 1e-11) << beta;
    const Eigen::MatrixXcd cols = displacement_matrix(beta, 20, 4);
    EXPECT_EQ(cols.cols(), 4);
    EXPECT_LE((cols - got.leftCols(4)).cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(Displacement, CoherentStateMeansAndLostMass) {
  Eigen::MatrixXcd vac = Eigen::MatrixXcd::Zero(30, 30);
  vac(0, 0) = 1.0;
  const auto s = apply_displacement(FockTwoModeState(vac), {1.2, -0.4}, 1);
  const Eigen::Vector4d m = quadrature_means(s);
  EXPECT_NEAR(m(0), 1.2, 1e-12);
  EXPECT_NEAR(m(1), -0.4, 1e-12);
  EXPECT_NEAR(m(2), 0.0, 1e-15);
  EXPECT_NEAR(s.norm_squared() + s.truncation_tail(), 1.0, 1e-14);
  // A large displacement on a small grid reports what fell off.
  Eigen::MatrixXcd small = Eigen::MatrixXcd::Zero(4, 4);
  small(0, 0) = 1.0;
  const auto t = apply_displacement(FockTwoModeState(small), {3.0, 0.0}, 2);
  EXPECT_GT(t.truncation_tail(), 0.5);
  EXPECT_NEAR(t.norm_squared() + t.truncation_tail(), 1.0, 1e-14);
  EXPECT_THROW(apply_displacement(FockTwoModeState(small), 1.0, 3), InvalidArgument);
}

}  // namespace
}  // namespace cventlab::fock
