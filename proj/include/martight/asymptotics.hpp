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

#ifndef MARTIGHT_ASYMPTOTICS_HPP_
#define MARTIGHT_ASYMPTOTICS_HPP_

#include <cstdint>
#include <vector>

#include "martight/tight_bound.hpp"

namespace martight {

// Complementary error function, (2 / sqrt(pi)) int_z^inf exp(-t^2) dt.
// Absolute error below 1e-13 on |z| <= 10. Negative arguments are reflected,
// erfc(-z) = 2 - erfc(z).
double erfc(double z);

// Limits as m -> infinity of the bounds at threshold r c sqrt(m).
double tight_one_limit(double r);  // erfc(r / sqrt 2)

inline constexpr double kDefaultSeriesTolerance = 1e-12;
inline constexpr int kMaxSeriesTerms = 256;

// 2 sum_{k>=0} (-1)^k erfc((2k+1) r / sqrt 2), truncated before the first
// term smaller than tol (or after kMaxSeriesTerms terms). Throws
// std::invalid_argument for r <= 0 or tol <= 0.
double tight_two_limit(double r, double tol = kDefaultSeriesTolerance);

double corollary_two_limit(double r);  // 2 erfc(r / sqrt 2)

// Fair +-c random walk: P(S_m >= r c sqrt m) and P(|S_m| >= r c sqrt m).
struct RandomWalkLimits {
  double one_sided = 0.0;
  double two_sided = 0.0;
};
RandomWalkLimits random_walk_limits(double r);

// One row of the limit-curve comparison. Values are not clamped.
struct AsymptoticSample {
  double r = 0.0;
  double azuma_one = 0.0;
  double azuma_two = 0.0;
  double tight_one = 0.0;
  double tight_two = 0.0;
  double corollary_two = 0.0;
  double rw_one = 0.0;
  double rw_two = 0.0;
};
AsymptoticSample asymptotic_sample(double r);

// Grid r_min, r_min + step, ... up to r_max (inclusive within 1e-9 step).
// Rows are computed independently and returned in grid order. Throws
// std::invalid_argument unless 0 < r_min < r_max and step > 0.
std::vector<AsymptoticSample> asymptotic_sweep(double r_min, double r_max, double step);

// Finite-horizon bound at x = floor(r sqrt m) against its limit.
struct ConvergenceProbe {
  double r = 0.0;
  std::int64_t m = 0;
  std::int64_t x = 0;
  bool two_sided = false;
  double finite_value = 0.0;
  double limit_value = 0.0;
  double gap = 0.0;
};

// finite_value is g_one_sided(x, m) or g_closed(x, x, m), exact (then rounded)
// within the limit and via ib_float beyond it. Requires r > 0 and m >= 4.
ConvergenceProbe convergence_probe(double r, std::int64_t m, bool two_sided,
                                   ExactLimit limit = {});

}  // namespace martight

#endif  // MARTIGHT_ASYMPTOTICS_HPP_
