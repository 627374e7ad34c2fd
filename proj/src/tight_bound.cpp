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

#include "martight/tight_bound.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

#include "martight/errors.hpp"
#include "martight/parity_binomial.hpp"

namespace martight {
namespace {

std::int64_t floor_half(std::int64_t v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

void require_non_negative(std::int64_t v, const char* name) {
  if (v < 0) {
    throw std::invalid_argument(std::string(name) + " must be non-negative, got " +
                                std::to_string(v));
  }
}

void require_within(std::int64_t m, ExactLimit limit) {
  if (m > limit.max_horizon) {
    throw ResourceError("horizon " + std::to_string(m) + " exceeds the exact-path limit " +
                        std::to_string(limit.max_horizon));
  }
}

// Reflection layout shared by the exact and floating sums: for the barrier at
// `near` with the other barrier at distance `far`, the w-th image pair is
// I(base - s w, width) - I(base - far - s w, width).
struct ImageSide {
  std::int64_t base;
  std::int64_t width;
  std::int64_t far;
};

ImageSide side_for(std::int64_t near, std::int64_t far, std::int64_t m) {
  const std::int64_t base = floor_half(m - near);
  return {base, 2 * base + near + 2, far};
}

template <typename Value, typename Ib>
Value reflection_sum(std::int64_t x, std::int64_t y, std::int64_t m, Ib ib) {
  const std::int64_t s = x + y;
  const ImageSide upper = side_for(x, y, m);
  const ImageSide lower = side_for(y, x, m);
  auto image_term = [&](std::int64_t w) {
    Value term = ib(upper.base - s * w, upper.width);
    term -= ib(upper.base - upper.far - s * w, upper.width);
    term += ib(lower.base - s * w, lower.width);
    term -= ib(lower.base - lower.far - s * w, lower.width);
    return term;
  };
  Value total{};
  const std::int64_t last = m / (2 * s);
  for (std::int64_t w = 0; w <= last; ++w) total += image_term(w);
  // Terms past the last image vanish identically.
  assert(image_term(last + 1) == Value{});
  return total;
}

}  // namespace

Dyadic g_closed(std::int64_t x, std::int64_t y, std::int64_t m, ExactLimit limit) {
  require_non_negative(x, "x");
  require_non_negative(y, "y");
  require_non_negative(m, "m");
  if (x == 0 || y == 0) return Dyadic(1);
  require_within(m, limit);
  return reflection_sum<Dyadic>(x, y, m, [](std::int64_t n, std::int64_t width) {
           return ib_exact({n, width});
         }).twice();
}

double g_closed_float(std::int64_t x, std::int64_t y, std::int64_t m) {
  require_non_negative(x, "x");
  require_non_negative(y, "y");
  require_non_negative(m, "m");
  if (x == 0 || y == 0) return 1.0;
  const double v = 2.0 * reflection_sum<double>(x, y, m, [](std::int64_t n, std::int64_t width) {
    return ib_float({n, width});
  });
  return std::clamp(v, 0.0, 1.0);
}

Dyadic g_one_sided(std::int64_t x, std::int64_t m, ExactLimit limit) {
  require_non_negative(x, "x");
  require_non_negative(m, "m");
  if (x == 0) return Dyadic(1);
  require_within(m, limit);
  const ImageSide side = side_for(x, 0, m);
  return ib_exact({side.base, side.width}).twice();
}

double g_one_sided_float(std::int64_t x, std::int64_t m) {
  require_non_negative(x, "x");
  require_non_negative(m, "m");
  if (x == 0) return 1.0;
  const ImageSide side = side_for(x, 0, m);
  return std::clamp(2.0 * ib_float({side.base, side.width}), 0.0, 1.0);
}

double g_value(std::int64_t x, LowerThreshold y, std::int64_t m, EvalMode mode,
               ExactLimit limit) {
  const bool exact =
      mode == EvalMode::kExact || (mode == EvalMode::kAuto && m <= limit.max_horizon);
  if (exact) {
    return (y ? g_closed(x, *y, m, limit) : g_one_sided(x, m, limit)).to_double();
  }
  return y ? g_closed_float(x, *y, m) : g_one_sided_float(x, m);
}

Dyadic corollary_bound(std::int64_t x, std::int64_t y, std::int64_t m, ExactLimit limit) {
  return g_one_sided(x, m, limit) + g_one_sided(y, m, limit);
}

double corollary_bound_float(std::int64_t x, std::int64_t y, std::int64_t m) {
  return g_one_sided_float(x, m) + g_one_sided_float(y, m);
}

double azuma_one(double threshold, std::int64_t m, double c) {
  if (!(threshold >= 0.0)) throw std::invalid_argument("azuma: threshold must be non-negative");
  if (m < 1) throw std::invalid_argument("azuma: horizon must be at least 1");
  if (!(c > 0.0)) throw std::invalid_argument("azuma: jump bound c must be positive");
  return std::exp(-threshold * threshold / (2.0 * static_cast<double>(m) * c * c));
}

double azuma_two(double threshold, std::int64_t m, double c) {
  return 2.0 * azuma_one(threshold, m, c);
}

void validate(const BoundQuery& q) {
  require_non_negative(q.x, "x");
  if (q.y) require_non_negative(*q.y, "y");
  require_non_negative(q.m, "m");
  if (!(q.c > 0.0) || !std::isfinite(q.c)) {
    throw std::invalid_argument("jump bound c must be positive and finite");
  }
}

std::int64_t threshold_in_units(double a, double c) {
  if (!(a >= 0.0) || !std::isfinite(a)) {
    throw std::invalid_argument("threshold must be non-negative and finite");
  }
  if (!(c > 0.0)) throw std::invalid_argument("jump bound c must be positive");
  return static_cast<std::int64_t>(std::floor(a / c));
}

BoundReport bound_report(const BoundQuery& q, EvalMode mode, ExactLimit limit) {
  validate(q);
  if (mode == EvalMode::kExact) require_within(q.m, limit);
  BoundReport report;
  report.exact =
      mode == EvalMode::kExact || (mode == EvalMode::kAuto && q.m <= limit.max_horizon);

  if (report.exact) {
    report.tight = q.y ? g_closed(q.x, *q.y, q.m, limit) : g_one_sided(q.x, q.m, limit);
    report.corollary = q.y ? corollary_bound(q.x, *q.y, q.m, limit) : *report.tight;
    report.tight_float = report.tight->to_double();
    report.corollary_float = report.corollary->to_double();
  } else {
    report.tight_float = q.y ? g_closed_float(q.x, *q.y, q.m) : g_one_sided_float(q.x, q.m);
    report.corollary_float =
        q.y ? corollary_bound_float(q.x, *q.y, q.m) : report.tight_float;
  }
  report.corollary_clamped = std::min(1.0, report.corollary_float);

  const double upper = static_cast<double>(q.x) * q.c;
  const double nearest =
      static_cast<double>(q.y ? std::min(q.x, *q.y) : q.x) * q.c;
  auto azuma_or_limit = [&](double threshold) {
    if (q.m == 0) return threshold > 0.0 ? 0.0 : 1.0;
    return azuma_one(threshold, q.m, q.c);
  };
  report.azuma_one = azuma_or_limit(upper);
  report.azuma_two = 2.0 * azuma_or_limit(nearest);
  report.azuma_two_clamped = std::min(1.0, report.azuma_two);
  return report;
}

}  // namespace martight
