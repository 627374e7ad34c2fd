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

#include "martight/envelope.hpp"

#include <cmath>
#include <stdexcept>

namespace martight {
namespace {

constexpr double kStepTolerance = 1e-12;

void require_envelope_args(std::int64_t n, std::int64_t m) {
  if (n < 0 || m < 0) throw std::invalid_argument("envelope: n and m must be non-negative");
}

}  // namespace

double h_envelope(const EnvelopeQuery& q, ExactLimit limit) {
  require_envelope_args(q.n, q.m);
  if (std::isnan(q.t)) throw std::invalid_argument("envelope: t is NaN");
  const auto n = static_cast<double>(q.n);
  if (std::fabs(q.t) >= n) return 1.0;
  const double mid = 0.5 * (n + q.t);
  const double knot = std::floor(mid);
  const double weight = mid - knot;
  const auto z = static_cast<std::int64_t>(knot);
  const double left = g_value(z, q.n - z, q.m, EvalMode::kAuto, limit);
  if (weight == 0.0) return left;
  const double right = g_value(z + 1, q.n - z - 1, q.m, EvalMode::kAuto, limit);
  return (1.0 - weight) * left + weight * right;
}

Dyadic h_envelope_exact(std::int64_t n, std::int64_t m, const Dyadic& t, ExactLimit limit) {
  require_envelope_args(n, m);
  const Dyadic bound(n);
  if (t >= bound || t <= -bound) return Dyadic(1);
  const Dyadic mid = (bound + t).half();
  const mpz_class knot = mid.floor();
  const Dyadic weight = mid - Dyadic(knot, 0);
  const std::int64_t z = knot.get_si();
  Dyadic value = (Dyadic(1) - weight) * g_closed(z, n - z, m, limit);
  if (!weight.is_zero()) value += weight * g_closed(z + 1, n - z - 1, m, limit);
  return value;
}

bool envelope_step_check(std::int64_t n, std::int64_t m, double t,
                         std::span<const DiscreteAtom> step, ExactLimit limit) {
  if (n < 1 || m < 1) throw std::invalid_argument("envelope step: n and m must be at least 1");
  if (step.empty()) throw std::invalid_argument("envelope step: empty distribution");
  double mass = 0.0;
  double mean = 0.0;
  for (const DiscreteAtom& atom : step) {
    if (!(std::fabs(atom.value) <= 1.0)) {
      throw std::invalid_argument("envelope step: atom outside [-1, 1]");
    }
    if (!(atom.probability >= 0.0)) {
      throw std::invalid_argument("envelope step: negative probability");
    }
    mass += atom.probability;
    mean += atom.probability * atom.value;
  }
  if (std::fabs(mass - 1.0) > kStepTolerance) {
    throw std::invalid_argument("envelope step: probabilities do not sum to 1");
  }
  if (std::fabs(mean) > kStepTolerance) {
    throw std::invalid_argument("envelope step: distribution mean is not 0");
  }

  double expected = 0.0;
  for (const DiscreteAtom& atom : step) {
    if (atom.probability == 0.0) continue;
    expected += atom.probability * h_envelope({n, m - 1, t - 2.0 * atom.value}, limit);
  }
  return expected <= h_envelope({n, m, t}, limit) + kStepTolerance;
}

}  // namespace martight
