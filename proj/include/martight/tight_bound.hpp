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

#ifndef MARTIGHT_TIGHT_BOUND_HPP_
#define MARTIGHT_TIGHT_BOUND_HPP_

#include <cstdint>
#include <optional>

#include "martight/dyadic.hpp"

namespace martight {

// Thresholds and horizons are integers measured in units of the jump bound c.
// An empty lower threshold means there is no lower barrier (one-sided tail).
using LowerThreshold = std::optional<std::int64_t>;

// Horizons above max_horizon are refused by the exact entry points and
// evaluated in double precision by the automatic ones.
struct ExactLimit {
  static constexpr std::int64_t kDefault = 4096;
  std::int64_t max_horizon = kDefault;
};

enum class EvalMode { kAuto, kExact, kFloat };

/**
 * Tight upper bound G(x, y, m) on P(X_m - X_0 >= x c  or  X_m - X_0 <= -y c)
 * over all martingales whose jumps are bounded by c.
 *
 * G is an alternating sum of parity-filtered binomial sums over the images
 * of the two barriers. G(x, 0, m) = G(0, y, m) = 1, including x = y = 0.
 *
 * Throws ResourceError when m > limit.max_horizon.
 */
Dyadic g_closed(std::int64_t x, std::int64_t y, std::int64_t m, ExactLimit limit = {});

// Same sum evaluated with ib_float; no horizon limit.
double g_closed_float(std::int64_t x, std::int64_t y, std::int64_t m);

// One-sided bound G(x, +inf, m) = 2 I(floor((m-x)/2), 2 floor((m-x)/2) + x + 2).
// Equals 1 at x = 0.
Dyadic g_one_sided(std::int64_t x, std::int64_t m, ExactLimit limit = {});
double g_one_sided_float(std::int64_t x, std::int64_t m);

// G(x, y, m) as a double: exact-then-rounded when m is within the limit (or
// mode is kExact), ib_float-based otherwise. An empty y selects G(x, +inf, m).
double g_value(std::int64_t x, LowerThreshold y, std::int64_t m, EvalMode mode = EvalMode::kAuto,
               ExactLimit limit = {});

// Union bound g_one_sided(x, m) + g_one_sided(y, m). Not clamped: the sum
// can exceed 1.
Dyadic corollary_bound(std::int64_t x, std::int64_t y, std::int64_t m, ExactLimit limit = {});
double corollary_bound_float(std::int64_t x, std::int64_t y, std::int64_t m);

// Azuma-Hoeffding with uniform jump bound c: exp(-a^2 / (2 m c^2)), where a is
// the threshold in the martingale's own units.
double azuma_one(double threshold, std::int64_t m, double c);
// Two-sided form, 2 exp(-a^2 / (2 m c^2)). Not clamped.
double azuma_two(double threshold, std::int64_t m, double c);

struct BoundQuery {
  std::int64_t x = 0;
  LowerThreshold y;  // empty: no lower barrier
  std::int64_t m = 0;
  double c = 1.0;
};

// Throws std::invalid_argument for negative thresholds or horizon, c <= 0.
void validate(const BoundQuery& q);

// Maps a real threshold a >= 0 (martingale units) to the largest integer x
// with x c <= a. Flooring keeps the resulting bound valid for the real event.
std::int64_t threshold_in_units(double a, double c);

struct BoundReport {
  bool exact = false;              // whether the Dyadic fields are populated
  std::optional<Dyadic> tight;     // G
  double tight_float = 0.0;
  std::optional<Dyadic> corollary; // raw union bound, equals tight when one-sided
  double corollary_float = 0.0;
  double corollary_clamped = 0.0;
  double azuma_one = 0.0;          // at threshold x c
  double azuma_two = 0.0;          // at threshold min(x, y) c
  double azuma_two_clamped = 0.0;
};

/**
 * Evaluates every bound for one query. Azuma values use the thresholds x c and
 * min(x, y) c in martingale units, so they bound exactly the events the tight
 * value bounds. At m = 0 the Azuma values take their m -> 0 limit (1 at a zero
 * threshold, 0 otherwise).
 *
 * kExact throws ResourceError above the limit; kAuto switches to doubles.
 */
BoundReport bound_report(const BoundQuery& q, EvalMode mode = EvalMode::kAuto,
                         ExactLimit limit = {});

}  // namespace martight

#endif  // MARTIGHT_TIGHT_BOUND_HPP_
