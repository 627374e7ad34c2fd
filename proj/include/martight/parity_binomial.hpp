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

#ifndef MARTIGHT_PARITY_BINOMIAL_HPP_
#define MARTIGHT_PARITY_BINOMIAL_HPP_

#include <cstdint>

#include "martight/dyadic.hpp"

namespace martight {

// Arguments of the parity-filtered binomial cumulative sum
//
//   I(n, m) = sum_{z=0..n} (1 + (-1)^(n-z)) 2^-m C(m, z)
//
// Only z with the parity of n contribute, each with weight 2 C(m, z) / 2^m.
// Empty sums (n < 0) and empty binomials (z > m) contribute nothing.
struct IbArgs {
  std::int64_t n = 0;  // upper summation limit, may be negative
  std::int64_t m = 0;  // number of fair trials

  // m >= 0, and m >= 1 whenever n >= 0.
  bool valid() const { return m >= 0 && (n < 0 || m >= 1); }
};

// Throws std::invalid_argument unless args.valid().
void validate(const IbArgs& args);

// Exact value; cost is O(min(n, m)) big-integer updates of O(m) bits.
Dyadic ib_exact(const IbArgs& args);

// Double precision value, evaluated term by term in log space with a
// saddle-point binomial pmf. Agrees with ib_exact to 1e-12 absolute. Usable
// for horizons far beyond the exact path (m ~ 1e7).
double ib_float(const IbArgs& args);

// I(n, m) + I(n-1, m) == 2 I(n, m+1), checked exactly. Requires m >= 1.
bool ib_pair_identity_check(std::int64_t n, std::int64_t m);

// P(Binomial(m, 1/2) = k) with relative error of a few ulps.
double binomial_half_pmf(std::int64_t k, std::int64_t m);

}  // namespace martight

#endif  // MARTIGHT_PARITY_BINOMIAL_HPP_
