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

#include "cventlab/estimation.hpp"

#include <gtest/gtest.h>

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <numeric>
#include <vector>

#include "cventlab/errors.hpp"

namespace cventlab::estimation {
namespace {

double delta_sq(double x) { return (1 - x) / (1 + x); }

TEST(ConditionalVariance, NoEntanglementNoNoise) {
  const auto v = conditional_variance({0.0, 0.0, {0.4, 0.1}});
  EXPECT_DOUBLE_EQ(v.entangled, 1.0);
  EXPECT_DOUBLE_EQ(v.unentangled, 1.0);
}

TEST(ConditionalVariance, VanishesAsSchmidtApproachesOne) {
  double prev = 1.0;
  for (double x : {0.9, 0.99, 0.999, 0.9999, 0.999999}) {
    const double v = conditional_variance({x, 0.0, {1.0, 0.0}}).entangled;
    EXPECT_LT(v, prev);
    EXPECT_NEAR(v, delta_sq(x), 1e-15 * (1 + x) / (1 - x));
    prev = v;
  }
  EXPECT_LT(prev, 1e-6);
}

TEST(ConditionalVariance, NoisyExample) {
  const auto v = conditional_variance({0.9, 0.5, {0.0, 0.0}});
  EXPECT_NEAR(v.entangled, delta_sq(0.9) + 2 * 0.5, 1e-14);
  EXPECT_NEAR(v.entangled, 1.0526, 1e-4);
  EXPECT_NEAR(v.unentangled, 1.5, 1e-14);
}

TEST(ConditionalVariance, RejectsBadSettings) {
  EXPECT_THROW(conditional_variance({1.0, 0.0, {}}), DomainError);
  EXPECT_THROW(conditional_variance({0.5, -0.1, {}}), DomainError);
  EXPECT_THROW(conditional_variance({0.5, 0.1, {NAN, 0.0}}), DomainError);
}

TEST(Convenience, Examples) {
  EXPECT_TRUE(entanglement_convenient({0.99, 0.9, {}}));
  EXPECT_NEAR(convenience_threshold(0.99), 1.98 / 1.99, 1e-14);
  for (int i = 0; i < 100; ++i) {
    const double x = i / 100.0;
    EXPECT_FALSE(entanglement_convenient({x, 1.0, {}})) << x;
    EXPECT_FALSE(entanglement_convenient({x, 1.5, {}})) << x;
  }
  for (double n : {0.0, 0.1, 2.0}) EXPECT_FALSE(entanglement_convenient({0.0, n, {}}));
}

TEST(Convenience, ThresholdIsTheRootOfTheVarianceGap) {
  for (double x : {0.1, 0.5, 0.9, 0.999, 0.999999}) {
    const double t = convenience_threshold(x);
    const auto gap = [&](double n) {
      const auto v = conditional_variance({x, n, {}});
      return v.entangled - v.unentangled;
    };
    const double noise = 1e-15 * (1 + x) / (1 - x) + 1e-15;
    EXPECT_NEAR(gap(t), 0.0, noise);
    boost::math::tools::eps_tolerance<double> tol(50);
    const auto [lo, hi] = boost::math::tools::bisect(gap, 0.0, 2.0, tol);
    EXPECT_NEAR(0.5 * (lo + hi), t, 10 * noise) << x;
    EXPECT_TRUE(entanglement_convenient({x, t - 100 * noise, {}}));
    EXPECT_FALSE(entanglement_convenient({x, t + 100 * noise, {}}));
  }
  EXPECT_NEAR(convenience_threshold(0.999), 1.998 / 1.999, 1e-14);
}

TEST(Simulation, VacuumProbeRmsIsOne) {
  const std::size_t n = 100000;
  const auto run = simulate_estimation({0.0, 0.0, {0.5, -0.5}}, n, 1);
  // The squared error is exponential with mean sigma^2, so its mean has
  // standard error sigma^2 / sqrt(n).
  EXPECT_NEAR(run.rms_entangled * run.rms_entangled, 1.0, 3.0 / std::sqrt(n));
  EXPECT_NEAR(run.rms_unentangled * run.rms_unentangled, 1.0, 3.0 / std::sqrt(n));
  EXPECT_EQ(run.trials, n);
}

TEST(Simulation, TwinBeamRmsMatchesVariance) {
  const std::size_t n = 100000;
  const auto run = simulate_estimation({0.9, 0.0, {2.0, 1.0}}, n, 2);
  const double v = delta_sq(0.9);
  EXPECT_NEAR(run.rms_entangled * run.rms_entangled, v, 3.0 * v / std::sqrt(n));
}

TEST(Simulation, AtOneThermalPhotonEntanglementDoesNotHelp) {
  const std::size_t n = 100000;
  const auto run = simulate_estimation({0.999, 1.0, {1.0, 0.0}}, n, 3);
  const double ve = delta_sq(0.999) + 2.0, vu = 2.0;
  const double sigma = std::sqrt(ve * ve + vu * vu) / std::sqrt(n);
  EXPECT_GE(run.rms_entangled * run.rms_entangled - run.rms_unentangled * run.rms_unentangled,
            -3.0 * sigma);
}

TEST(Simulation, ErrorShrinksLikeInverseRootN) {
  // Mean absolute deviation of the estimated variance over many seeds, on a
  // doubling ladder of trial counts; the log-log slope should be -1/2.
  const EstimationSetting s{0.5, 0.2, {1.0, 0.0}};
  const double v = conditional_variance(s).entangled;
  std::vector<double> log_n, log_err;
  for (std::size_t n = 500; n <= 64000; n *= 2) {
    double err = 0.0;
    const int seeds = 60;
    for (int k = 0; k < seeds; ++k) {
      const auto run = simulate_estimation(s, n, 1000 + k);
      err += std::abs(run.rms_entangled * run.rms_entangled - v);
    }
    log_n.push_back(std::log(static_cast<double>(n)));
    log_err.push_back(std::log(err / seeds));
  }
  const double mx = std::accumulate(log_n.begin(), log_n.end(), 0.0) / log_n.size();
  const double my = std::accumulate(log_err.begin(), log_err.end(), 0.0) / log_err.size();
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < log_n.size(); ++i) {
    sxy += (log_n[i] - mx) * (log_err[i] - my);
    sxx += (log_n[i] - mx) * (log_n[i] - mx);
  }
  EXPECT_NEAR(sxy / sxx, -0.5, 0.1);
}

TEST(Simulation, DeterministicAndValidated) {
  const EstimationSetting s{0.3, 0.1, {0.2, 0.2}};
  const auto a = simulate_estimation(s, 5000, 77);
  const auto b = simulate_estimation(s, 5000, 77);
  EXPECT_EQ(a.rms_entangled, b.rms_entangled);
  EXPECT_EQ(a.rms_unentangled, b.rms_unentangled);
  EXPECT_NE(a.rms_entangled, a.rms_unentangled);
  EXPECT_THROW(simulate_estimation(s, 0, 1), InvalidArgument);
}

}  // namespace
}  // namespace cventlab::estimation
