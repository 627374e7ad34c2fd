// Copyright 2026 The martight Authors
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

#include "martight/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace martight {
namespace {

constexpr double kInvSqrtPi = std::numbers::inv_sqrtpi;
constexpr double kInvSqrt2 = 0.70710678118654752440;

// erf(z) = (2/sqrt(pi)) exp(-z^2) sum_n 2^n z^(2n+1) / (1 3 5 ... (2n+1)).
// All terms are positive, so there is no cancellation for z in [0, 2].
double erf_series(double z) {
  const double z2 = z * z;
  double term = z;
  double sum = z;
  for (int n = 1; n < 200; ++n) {
    term *= 2.0 * z2 / (2 * n + 1);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return 2.0 * kInvSqrtPi * std::exp(-z2) * sum;
}

// erfc(z) = exp(-z^2) / (sqrt(pi) K), K = z + (1/2)/(z + 1/(z + (3/2)/(z + ...))),
// evaluated with the modified Lentz method. Intended for z > 2.
double erfc_continued_fraction(double z) {
  constexpr double kTiny = 1e-300;
  double f = z;
  double c = f;
  double d = 0.0;
  for (int j = 1; j < 5000; ++j) {
    const double a = 0.5 * j;
    d = z + a * d;
    if (d == 0.0) d = kTiny;
    d = 1.0 / d;
    c = z + a / c;
    if (c == 0.0) c = kTiny;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-z * z) * kInvSqrtPi / f;
}

void require_positive_r(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument("r must be positive and finite");
  }
}

}  // namespace

double erfc(double z) {
  if (std::isnan(z)) return z;
  if (z < 0.0) return 2.0 - martight::erfc(-z);
  if (z <= 2.0) return 1.0 - erf_series(z);
  if (z > 27.3) return 0.0;
  return erfc_continued_fraction(z);
}

double tight_one_limit(double r) {
  require_positive_r(r);
  return martight::erfc(r * kInvSqrt2);
}

double tight_two_limit(double r, double tol) {
  require_positive_r(r);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  double sum = martight::erfc(r * kInvSqrt2);
  for (int k = 1; k < kMaxSeriesTerms; ++k) {
    const double term = martight::erfc((2 * k + 1) * r * kInvSqrt2);
    if (term < tol) break;
    sum += (k % 2 == 0) ? term : -term;
  }
  return 2.0 * sum;
}

double corollary_two_limit(double r) {
  require_positive_r(r);
  return 2.0 * martight::erfc(r * kInvSqrt2);
}

RandomWalkLimits random_walk_limits(double r) {
  require_positive_r(r);
  const double tail = martight::erfc(r * kInvSqrt2);
  return {0.5 * tail, tail};
}

AsymptoticSample asymptotic_sample(double r) {
  require_positive_r(r);
  AsymptoticSample s;
  s.r = r;
  s.azuma_one = std::exp(-0.5 * r * r);
  s.azuma_two = 2.0 * s.azuma_one;
  s.tight_one = tight_one_limit(r);
  s.tight_two = tight_two_limit(r);
  s.corollary_two = corollary_two_limit(r);
  const RandomWalkLimits rw = random_walk_limits(r);
  s.rw_one = rw.one_sided;
  s.rw_two = rw.two_sided;
  return s;
}

std::vector<AsymptoticSample> asymptotic_sweep(double r_min, double r_max, double step) {
  if (!(r_min > 0.0) || !(r_max > r_min) || !std::isfinite(r_max)) {
    throw std::invalid_argument("sweep: need 0 < r_min < r_max");
  }
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("sweep: step must be positive");
  }
  const auto count = static_cast<std::int64_t>(std::floor((r_max - r_min) / step + 1e-9)) + 1;
  std::vector<AsymptoticSample> rows;
  rows.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    rows.push_back(asymptotic_sample(r_min + static_cast<double>(i) * step));
  }
  return rows;
}

ConvergenceProbe convergence_probe(double r, std::int64_t m, bool two_sided, ExactLimit limit) {
  require_positive_r(r);
  if (m < 4) throw std::invalid_argument("convergence probe: m must be at least 4");
  ConvergenceProbe probe;
  probe.r = r;
  probe.m = m;
  probe.two_sided = two_sided;
  probe.x = static_cast<std::int64_t>(std::floor(r * std::sqrt(static_cast<double>(m))));
  const LowerThreshold lower = two_sided ? LowerThreshold{probe.x} : std::nullopt;
  probe.finite_value = g_value(probe.x, lower, m, EvalMode::kAuto, limit);
  probe.limit_value = two_sided ? tight_two_limit(r) : tight_one_limit(r);
  probe.gap = std::fabs(probe.finite_value - probe.limit_value);
  return probe;
}

}  // namespace martight
