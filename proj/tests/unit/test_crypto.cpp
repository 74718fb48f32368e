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

#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "cventlab/errors.hpp"
#include "cventlab/fock_oracle.hpp"

namespace cventlab::crypto {
namespace {

using boost::math::quadrature::gauss_kronrod;
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double delta_sq(double x) { return (1 - x) / (1 + x); }

double helstrom_from_states(const fock::FockTwoModeState& a, const fock::FockTwoModeState& b) {
  const double q = std::norm(fock::overlap(a, b));
  return 0.5 * (1 - std::sqrt(1 - q));
}

TEST(IdealReceiver, Examples) {
  const double x = 1 / std::sqrt(3.0);  // one photon in total
  EXPECT_NEAR(bob_ideal_error(x, {1, 0}, {-1, 0}), 8.3873e-5, 1e-9);
  EXPECT_NEAR(coherent_error({1, 0}, {-1, 0}), 4.61e-3, 1e-5);
  EXPECT_NEAR(bob_ideal_error(0.0, {0.3, 0.2}, {-0.1, 0.5}),
              coherent_error({0.3, 0.2}, {-0.1, 0.5}), 1e-16);
  EXPECT_EQ(bob_ideal_error(0.5, {0.2, 0.2}, {0.2, 0.2}), 0.5);
}

TEST(IdealReceiver, MatchesFockStates) {
  for (double x : {0.3, 0.6}) {
    const auto psi = fock::twin_beam_fock(x, fock::default_cutoff(x, 1e-14));
    for (Complex z1 : {Complex(0.3, 0.0), Complex(0.5, -0.4)}) {
      const Complex z0 = -z1;
      const double fock_value = helstrom_from_states(fock::apply_displacement(psi, z0, 1),
                                                     fock::apply_displacement(psi, z1, 1));
      EXPECT_NEAR(bob_ideal_error(x, z0, z1), fock_value, 1e-9) << x;
    }
  }
}

TEST(IdealReceiver, BeatsCoherentStates) {
  for (double x = 0.05; x < 0.99; x += 0.1) {
    for (double d = 0.1; d < 2.0; d += 0.3) {
      EXPECT_LT(bob_ideal_error(x, {d / 2, 0}, {-d / 2, 0}), coherent_error({d / 2, 0}, {-d / 2, 0}));
    }
  }
}

TEST(IdealReceiver, Asymptote) {
  const double x = 0.5;
  for (double d : {2.0, 3.0, 4.0}) {
    const double exact = bob_ideal_error(x, {d / 2, 0}, {-d / 2, 0});
    const double approx = bob_ideal_error_asymptote(x, {d / 2, 0}, {-d / 2, 0});
    EXPECT_NEAR(approx / exact, 1.0, 1e-3) << d;
  }
}

TEST(Eavesdropper, UniformKeyIsBlind) {
  EXPECT_EQ(eve_error_uniform(), 0.5);
  double prev = 1.0;
  for (double radius : {1.0, 2.0, 3.0}) {
    const double r = eve_uniform_key_residual(0.5, 0.5, radius);
    EXPECT_LT(r, prev) << radius;
    EXPECT_GT(r, 0.0);
    prev = r;
  }
  EXPECT_LT(prev, 0.06);
  EXPECT_THROW(eve_uniform_key_residual(0.5, 0.5, 0.0), DomainError);
  EXPECT_THROW(eve_uniform_key_residual(0.5, 0.5, 1.0, {0.1, 3, 5}), InvalidArgument);
}

TEST(Eavesdropper, PositiveEigenvalueSumIsHalfTotalVariation) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> amp(0.05, 2.0), key(0.1, 3.0);
  for (int trial = 0; trial < 10; ++trial) {
    const double a = amp(rng), k = key(rng);
    const double var = 0.5 * k;
    const auto g = [&](double u, double c) {
      return std::exp(-(u - c) * (u - c) / (2 * var)) / std::sqrt(2 * kPi * var);
    };
    const auto inner = [&](double u) {
      const double diff = std::max(0.0, g(u, a) - g(u, -a));
      return gauss_kronrod<double, 31>::integrate(
          [&](double v) { return diff * g(v, 0.0); }, -kInf, kInf, 10, 1e-12);
    };
    const double s = gauss_kronrod<double, 31>::integrate(inner, -kInf, kInf, 12, 1e-12);
    EXPECT_NEAR(positive_eigenvalue_sum(a, k), s, 1e-8) << a << " " << k;
  }
}

TEST(Eavesdropper, GaussianKey) {
  EXPECT_NEAR(eve_error_gaussian_key(1.0, 1.0), 0.0786, 1e-4);
  EXPECT_NEAR(eve_error_gaussian_key(1.0, 1.0), 0.5 * (1 - positive_eigenvalue_sum(1.0, 1.0)),
              1e-15);
  EXPECT_EQ(eve_error_gaussian_key(0.0, 1.0), 0.5);
  const double exact = eve_error_gaussian_key(3.0, 1.0);
  EXPECT_NEAR(eve_error_gaussian_key_asymptote(3.0, 1.0) / exact, 1.0, 0.1);
  double prev = 0.0;
  for (double k = 0.1; k < 10.0; k += 0.5) {
    const double e = eve_error_gaussian_key(0.7, k);
    EXPECT_GT(e, prev);
    prev = e;
  }
  EXPECT_THROW(eve_error_gaussian_key(1.0, 0.0), DomainError);
  EXPECT_THROW(eve_error_gaussian_key(-1.0, 1.0), DomainError);
}

TEST(Heterodyne, ReceiverVariance) {
  EXPECT_NEAR(2 * receiver_variance(0.8), 1.0 / 9.0, 1e-15);
  EXPECT_NEAR(2 * quoted_receiver_variance(0.8), 0.36, 1e-15);
  EXPECT_NEAR(receiver_variance(0.0), 0.5, 1e-15);
  EXPECT_THROW(quoted_receiver_variance(1.0), DomainError);
}

TEST(Heterodyne, BobErrorIsHalfPlaneMass) {
  for (double x : {0.0, 0.5, 0.8}) {
    for (double nbar : {0.0, 0.3}) {
      const double a = 0.6;
      const double var = receiver_variance(x) + nbar;
      const double mass = gauss_kronrod<double, 61>::integrate(
          [&](double u) { return std::exp(-(u - a) * (u - a) / (2 * var)) / std::sqrt(2 * kPi * var); },
          -kInf, 0.0, 12, 1e-13);
      EXPECT_NEAR(bob_heterodyne_error(x, a, nbar), mass, 1e-10) << x << " " << nbar;
    }
  }
}

TEST(Heterodyne, EveSeesKeyAndReceiverNoise) {
  EXPECT_NEAR(eve_heterodyne_error(0.8, 0.5, 1.0), 0.5 * std::erfc(0.5 / std::sqrt(1.0 + 1.0 / 9.0)),
              1e-15);
  // Only as x -> 1 does the threshold error reach the Gaussian-key value.
  EXPECT_GT(eve_heterodyne_error(0.8, 0.5, 1.0), eve_error_gaussian_key(0.5, 1.0));
  EXPECT_NEAR(eve_heterodyne_error(1 - 1e-12, 0.5, 1.0), eve_error_gaussian_key(0.5, 1.0), 1e-12);
}

TEST(Heterodyne, SimulationMatchesClosedForms) {
  const std::size_t bits = 1000000;
  for (const ProtocolConfig cfg : {ProtocolConfig{0.8, 0.5, 1.0, 0.0},
                                   ProtocolConfig{0.3, 0.4, 0.5, 0.2}}) {
    const auto out = simulate_binary_protocol(cfg, bits, 5);
    const double pb = bob_heterodyne_error(cfg.x, cfg.a, cfg.nbar);
    const double pe = eve_heterodyne_error(cfg.x, cfg.a, cfg.kappa_key, cfg.nbar);
    EXPECT_NEAR(out.bob_error_rate(), pb, 3 * std::sqrt(pb * (1 - pb) / bits));
    EXPECT_NEAR(out.eve_error_rate(), pe, 3 * std::sqrt(pe * (1 - pe) / bits));
  }
}

TEST(Heterodyne, SimulationDeterminismAndLimits) {
  const ProtocolConfig cfg{0.6, 0.5, 1.0, 0.0};
  const auto a = simulate_binary_protocol(cfg, 20000, 9);
  const auto b = simulate_binary_protocol(cfg, 20000, 9);
  EXPECT_EQ(a.bob_errors, b.bob_errors);
  EXPECT_EQ(a.eve_errors, b.eve_errors);

  const std::size_t bits = 200000;
  const auto blind = simulate_binary_protocol({0.6, 0.5, 1e6, 0.0}, bits, 10);
  EXPECT_NEAR(blind.eve_error_rate(), 0.5, 3 * 0.5 / std::sqrt(bits));
  EXPECT_THROW(simulate_binary_protocol(cfg, 0, 1), InvalidArgument);
  EXPECT_THROW(simulate_binary_protocol({0.6, 0.5, 0.0, 0.0}, 10, 1), DomainError);
}

TEST(Security, Margin) {
  const auto m = security_margin(0.8, 1.0, 0.5);
  EXPECT_TRUE(m.secure);
  EXPECT_LT(m.bob_error, m.eve_error);
  EXPECT_FALSE(security_margin(0.0, 0.5, 0.5).secure);
  EXPECT_FALSE(security_margin(0.0, 1.0, 0.5).secure);
  EXPECT_TRUE(security_margin(0.0, 1.0 + 1e-9, 0.5).secure);
}

TEST(Alphabet, Variances) {
  const auto pdfs = alphabet_pdfs({0.5, 0}, 1.0 / 3.0, 1.0);
  EXPECT_NEAR(pdfs.bob_variance, 0.5, 1e-15);
  EXPECT_NEAR(pdfs.eve_variance, 1.5, 1e-15);
  EXPECT_NEAR(pdfs.bob_variance, delta_sq(1.0 / 3.0), 1e-15);
}

TEST(Alphabet, EveDensityIsBobConvolvedWithKey) {
  const double kappa = 0.7;
  const auto pdfs = alphabet_pdfs({0.4, -0.2}, 0.5, kappa);
  const auto key = [&](double u, double v) {
    return std::exp(-(u * u + v * v) / kappa) / (kPi * kappa);
  };
  for (Complex z : {Complex(0.4, -0.2), Complex(1.0, 0.3), Complex(-0.5, -1.0)}) {
    const double conv = gauss_kronrod<double, 31>::integrate(
        [&](double u) {
          return gauss_kronrod<double, 31>::integrate(
              [&](double v) { return key(u, v) * pdfs.bob_pdf(z - Complex(u, v)); }, -kInf, kInf,
              10, 1e-12);
        },
        -kInf, kInf, 10, 1e-12);
    EXPECT_NEAR(pdfs.eve_pdf(z), conv, 1e-6);
  }
  double total = gauss_kronrod<double, 31>::integrate(
      [&](double u) {
        return gauss_kronrod<double, 31>::integrate(
            [&](double v) { return pdfs.bob_pdf({u, v}); }, -kInf, kInf, 10, 1e-12);
      },
      -kInf, kInf, 10, 1e-12);
  EXPECT_NEAR(total, 1.0, 1e-9);
}

}  // namespace
}  // namespace cventlab::crypto
