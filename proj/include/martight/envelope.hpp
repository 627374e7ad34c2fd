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

#ifndef MARTIGHT_ENVELOPE_HPP_
#define MARTIGHT_ENVELOPE_HPP_

#include <cstdint>
#include <span>

#include "martight/dyadic.hpp"
#include "martight/tight_bound.hpp"

namespace martight {

// Piecewise-linear envelope H_{n,m}(t) of G along the anti-diagonal x + y = n,
// parametrized by t = x - y. Knots sit at t = -n, -n+2, ..., n with value
// G((n+t)/2, (n-t)/2, m); outside |t| < n the envelope is 1.
struct EnvelopeQuery {
  std::int64_t n = 0;
  std::int64_t m = 0;
  double t = 0.0;
};

// Interpolates in double precision between exact knot values. Horizons above
// the exact limit use floating knots.
double h_envelope(const EnvelopeQuery& q, ExactLimit limit = {});

// Exact value for any dyadic t (in particular every integer t).
Dyadic h_envelope_exact(std::int64_t n, std::int64_t m, const Dyadic& t, ExactLimit limit = {});

struct DiscreteAtom {
  double value = 0.0;
  double probability = 0.0;
};

// Checks the one-step envelope inequality
//   sum_i p_i H_{n,m-1}(t - 2 z_i) <= H_{n,m}(t) + 1e-12
// for a finite mean-zero step distribution supported on [-1, 1].
//
// Throws std::invalid_argument if n < 1, m < 1, or the distribution has an
// atom outside [-1, 1], a negative probability, total mass != 1 or mean != 0
// (both to 1e-12).
bool envelope_step_check(std::int64_t n, std::int64_t m, double t,
                         std::span<const DiscreteAtom> step, ExactLimit limit = {});

}  // namespace martight

#endif  // MARTIGHT_ENVELOPE_HPP_
