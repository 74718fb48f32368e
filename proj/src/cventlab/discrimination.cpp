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

#include "cventlab/discrimination.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "cventlab/errors.hpp"

namespace cventlab::discrimination {
namespace {

using Complex = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMaxSumsetSize = 2e6;

double reduce_phase(double phase) {
  double r = std::fmod(phase, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

struct SegmentPoint {
  double distance;
  double t;
};

SegmentPoint closest_to_origin(Complex a, Complex b) {
  const Complex d = b - a;
  const double len_sq = std::norm(d);
  double t = 0.0;
  if (len_sq > 0.0) t = std::clamp(-(std::conj(a) * d).real() / len_sq, 0.0, 1.0);
  return {std::abs(a + t * d), t};
}

Complex combination(const std::vector<Complex>& v, const std::vector<double>& w) {
  Complex z = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) z += w[j] * v[j];
  return z;
}

// Barycentric coordinates of the origin in triangle (a, b, c).
std::array<double, 3> origin_barycentric(Complex a, Complex b, Complex c) {
  const Complex e1 = b - a;
  const Complex e2 = c - a;
  const double det = e1.real() * e2.imag() - e1.imag() * e2.real();
  if (det == 0.0) return {-1.0, -1.0, -1.0};
  const double s = (-a.real() * e2.imag() + a.imag() * e2.real()) / det;
  const double u = (-e1.real() * a.imag() + e1.imag() * a.real()) / det;
  return {1.0 - s - u, s, u};
}

}  // namespace

EigenphaseSpectrum::EigenphaseSpectrum(std::span<const double> phases) {
  if (phases.empty()) throw InvalidArgument("eigenphase spectrum must be non-empty");
  std::vector<double> reduced;
  reduced.reserve(phases.size());
  for (double p : phases) {
    if (!std::isfinite(p)) throw InvalidArgument("eigenphases must be finite");
    reduced.push_back(reduce_phase(p));
  }
  std::sort(reduced.begin(), reduced.end());
  for (double p : reduced) {
    if (phases_.empty() || p - phases_.back() > kPhaseTolerance) phases_.push_back(p);
  }
  if (phases_.size() > 1 && phases_.front() + kTwoPi - phases_.back() <= kPhaseTolerance) {
    phases_.pop_back();
  }
}

PolygonK build_polygon(const EigenphaseSpectrum& spectrum) {
  PolygonK poly;
  poly.phases = spectrum.phases();
  const std::size_t k = poly.phases.size();
  for (double p : poly.phases) poly.vertices.push_back(std::polar(1.0, p));
  if (k == 1) {
    poly.distance = 1.0;
    poly.spread = 0.0;
    return poly;
  }

  double max_gap = -1.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double gap = i + 1 < k ? poly.phases[i + 1] - poly.phases[i]
                                 : poly.phases[0] + kTwoPi - poly.phases[i];
    if (gap > max_gap) max_gap = gap;
  }
  poly.spread = kTwoPi - max_gap;
  if (max_gap <= std::numbers::pi + EigenphaseSpectrum::kPhaseTolerance) {
    poly.distance = 0.0;
    return poly;
  }

  const std::size_t edges = k == 2 ? 1 : k;
  poly.distance = 2.0;
  for (std::size_t i = 0; i < edges; ++i) {
    const std::size_t j = (i + 1) % k;
    const auto hit = closest_to_origin(poly.vertices[i], poly.vertices[j]);
    if (hit.distance < poly.distance) {
      poly.distance = hit.distance;
      poly.nearest_from = i;
      poly.nearest_to = j;
      poly.nearest_t = hit.t;
    }
  }
  return poly;
}

double min_error_probability(const PolygonK& polygon) {
  const double q = polygon.distance * polygon.distance;
  return 0.5 * q / (1.0 + std::sqrt(std::max(0.0, 1.0 - q)));
}

double spread_error_probability(double spread) {
  if (!std::isfinite(spread) || spread < 0.0) throw DomainError("spread must be >= 0");
  if (spread >= std::numbers::pi) return 0.0;
  const double c = std::cos(0.5 * spread);
  const double q = c * c * c * c;
  return 0.5 * q / (1.0 + std::sqrt(std::max(0.0, 1.0 - q)));
}

std::vector<double> optimal_probe_weights(const PolygonK& polygon) {
  const std::size_t k = polygon.vertices.size();
  std::vector<double> w(k, 0.0);
  if (k == 1) {
    w[0] = 1.0;
    return w;
  }
  if (!polygon.contains_origin()) {
    w[polygon.nearest_from] += 1.0 - polygon.nearest_t;
    w[polygon.nearest_to] += polygon.nearest_t;
    return w;
  }
  if (k == 2) {
    w[0] = w[1] = 0.5;
    return w;
  }
  // Fan triangulation from vertex 0; keep the triangle that holds the origin
  // most comfortably.
  std::array<double, 3> best{-2.0, -2.0, -2.0};
  std::size_t best_i = 1;
  for (std::size_t i = 1; i + 1 < k; ++i) {
    const auto bary =
        origin_barycentric(polygon.vertices[0], polygon.vertices[i], polygon.vertices[i + 1]);
    if (std::min({bary[0], bary[1], bary[2]}) > std::min({best[0], best[1], best[2]})) {
      best = bary;
      best_i = i;
    }
  }
  for (double& b : best) b = std::max(0.0, b);
  const double total = best[0] + best[1] + best[2];
  w[0] = best[0] / total;
  w[best_i] += best[1] / total;
  w[best_i + 1] += best[2] / total;
  return w;
}

SingleCopyComparison entanglement_no_single_copy_gain(const EigenphaseSpectrum& spectrum,
                                                      std::size_t ancilla_dim) {
  if (ancilla_dim == 0) throw InvalidArgument("ancilla dimension must be >= 1");
  // U (x) I repeats every eigenphase ancilla_dim times.
  std::vector<double> extended;
  extended.reserve(spectrum.size() * ancilla_dim);
  for (double p : spectrum.phases()) {
    for (std::size_t a = 0; a < ancilla_dim; ++a) extended.push_back(p);
  }
  SingleCopyComparison cmp;
  cmp.distance_plain = build_polygon(spectrum).distance;
  cmp.distance_extended = build_polygon(EigenphaseSpectrum(extended)).distance;
  cmp.equal = cmp.distance_plain == cmp.distance_extended;
  return cmp;
}

std::optional<std::size_t> copies_for_exact(const EigenphaseSpectrum& spectrum) {
  const double spread = build_polygon(spectrum).spread;
  if (spread <= EigenphaseSpectrum::kPhaseTolerance) return std::nullopt;
  const double ratio = std::numbers::pi / spread;
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(ratio - 1e-9)));
}

EigenphaseSpectrum tensor_power_spectrum(const EigenphaseSpectrum& spectrum, std::size_t copies) {
  if (copies == 0) throw InvalidArgument("copies must be >= 1");
  EigenphaseSpectrum current = spectrum;
  for (std::size_t c = 1; c < copies; ++c) {
    if (static_cast<double>(current.size()) * static_cast<double>(spectrum.size()) >
        kMaxSumsetSize) {
      throw InvalidArgument("tensor power spectrum too large to enumerate");
    }
    std::vector<double> sums;
    sums.reserve(current.size() * spectrum.size());
    for (double a : current.phases()) {
      for (double b : spectrum.phases()) sums.push_back(a + b);
    }
    current = EigenphaseSpectrum(sums);
  }
  return current;
}

double sampled_min_overlap(const EigenphaseSpectrum& spectrum, std::size_t samples,
                           unsigned long long seed) {
  const std::size_t k = spectrum.size();
  std::vector<Complex> v;
  for (double p : spectrum.phases()) v.push_back(std::polar(1.0, p));
  if (k == 1) return 1.0;

  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> best(k, 1.0 / static_cast<double>(k));
  double best_abs = std::abs(combination(v, best));
  std::vector<double> w(k);
  for (std::size_t s = 0; s < samples; ++s) {
    double total = 0.0;
    for (auto& x : w) total += (x = expo(rng));
    for (auto& x : w) x /= total;
    const double a = std::abs(combination(v, w));
    if (a < best_abs) {
      best_abs = a;
      best = w;
    }
  }

  // Pairwise mass transfer with exact line search on |z|^2.
  Complex z = combination(v, best);
  for (int sweep = 0; sweep < 10000; ++sweep) {
    const double start = std::norm(z);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        const Complex d = v[j] - v[i];
        const double len_sq = std::norm(d);
        if (len_sq == 0.0) continue;
        const double t =
            std::clamp(-(std::conj(z) * d).real() / len_sq, -best[j], best[i]);
        if (t == 0.0) continue;
        best[i] -= t;
        best[j] += t;
        z = combination(v, best);
      }
    }
    if (start - std::norm(z) <= 1e-18 * std::max(start, 1e-300)) break;
  }
  return std::min(best_abs, std::abs(z));
}

}  // namespace cventlab::discrimination
