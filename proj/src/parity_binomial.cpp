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

#include "martight/parity_binomial.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace martight {
namespace {

// log(n!) - ((n + 1/2) log n - n + log sqrt(2 pi)) for n = 0..15.
constexpr std::array<double, 16> kStirlingErrorTable = {
    0.0,  // unused
    0.08106146679532725821967026,  0.04134069595540929409382208,
    0.02767792568499833914878929,  0.02079067210376509311152277,
    0.01664469118982119216319487,  0.01387612882307074799874573,
    0.01189670994589177009505572,  0.01041126526197209649747857,
    0.009255462182712732917728637, 0.008330563433362871256469319,
    0.007573675487951840794972024, 0.006942840107209529865664153,
    0.006408994188004207068439631, 0.005951370112758847735624416,
    0.00555473355196280137103869,
};

double stirling_error(double n) {
  constexpr double s0 = 1.0 / 12.0;
  constexpr double s1 = 1.0 / 360.0;
  constexpr double s2 = 1.0 / 1260.0;
  constexpr double s3 = 1.0 / 1680.0;
  constexpr double s4 = 1.0 / 1188.0;
  if (n <= 15.0) return kStirlingErrorTable[static_cast<std::size_t>(n)];
  const double nn = n * n;
  if (n > 500.0) return (s0 - s1 / nn) / n;
  if (n > 80.0) return (s0 - (s1 - s2 / nn) / nn) / n;
  if (n > 35.0) return (s0 - (s1 - (s2 - s3 / nn) / nn) / nn) / n;
  return (s0 - (s1 - (s2 - (s3 - s4 / nn) / nn) / nn) / nn) / n;
}

// Deviance term x log(x / mean) + mean - x, accurate when x is near mean.
double deviance(double x, double mean) {
  if (std::fabs(x - mean) < 0.1 * (x + mean)) {
    double v = (x - mean) / (x + mean);
    double s = (x - mean) * v;
    double ej = 2.0 * x * v;
    v *= v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v;
      const double next = s + ej / (2 * j + 1);
      if (next == s) return next;
      s = next;
    }
    return s;
  }
  return x * std::log(x / mean) + mean - x;
}

// Neumaier compensated accumulator.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double term) {
    const double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term)) {
      carry += (sum - t) + term;
    } else {
      carry += (term - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

std::int64_t floor_mod2(std::int64_t v) { return ((v % 2) + 2) % 2; }

}  // namespace

void validate(const IbArgs& args) {
  if (args.m < 0) {
    throw std::invalid_argument("parity binomial: m must be non-negative, got " +
                                std::to_string(args.m));
  }
  if (args.n >= 0 && args.m == 0) {
    throw std::invalid_argument("parity binomial: m must be positive when n >= 0");
  }
}

Dyadic ib_exact(const IbArgs& args) {
  validate(args);
  if (args.n < 0) return Dyadic{};
  const std::int64_t upper = std::min(args.n, args.m);
  const std::int64_t parity = floor_mod2(args.n);

  // Running C(m, z) by multiplicative update; keep every z <= upper whose
  // parity matches n.
  mpz_class binom = 1;
  mpz_class total = 0;
  for (std::int64_t z = 0; z <= upper; ++z) {
    if (floor_mod2(z) == parity) total += binom;
    binom *= static_cast<unsigned long>(args.m - z);
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(z + 1));
  }
  // Each kept term carries weight 2 / 2^m.
  return Dyadic(std::move(total), static_cast<std::uint64_t>(args.m - 1));
}

double binomial_half_pmf(std::int64_t k, std::int64_t m) {
  if (k < 0 || k > m) return 0.0;
  if (k == 0 || k == m) return std::ldexp(1.0, static_cast<int>(std::max<std::int64_t>(-m, -2000)));
  const double n = static_cast<double>(m);
  const double x = static_cast<double>(k);
  const double mean = 0.5 * n;
  const double log_core = stirling_error(n) - stirling_error(x) - stirling_error(n - x) -
                          deviance(x, mean) - deviance(n - x, mean);
  const double log_scale = std::log(2.0 * std::numbers::pi) + std::log(x) + std::log1p(-x / n);
  return std::exp(log_core - 0.5 * log_scale);
}

double ib_float(const IbArgs& args) {
  validate(args);
  if (args.n < 0) return 0.0;
  const std::int64_t parity = floor_mod2(args.n);
  const std::int64_t lowest = parity;
  std::int64_t highest = std::min(args.n, args.m);
  if (floor_mod2(highest) != parity) --highest;
  if (highest < lowest) return 0.0;

  // Start at the admissible index nearest the mode and walk outward; the pmf
  // is unimodal, so each direction can stop once terms become negligible.
  std::int64_t peak = args.m / 2;
  if (floor_mod2(peak) != parity) ++peak;
  peak = std::clamp(peak, lowest, highest);

  constexpr double kNegligible = 1e-18;
  CompensatedSum acc;
  for (std::int64_t z = peak; z >= lowest; z -= 2) {
    const double term = binomial_half_pmf(z, args.m);
    acc.add(term);
    if (term <= kNegligible * acc.value()) break;
  }
  for (std::int64_t z = peak + 2; z <= highest; z += 2) {
    const double term = binomial_half_pmf(z, args.m);
    acc.add(term);
    if (term <= kNegligible * acc.value()) break;
  }
  return 2.0 * acc.value();
}

bool ib_pair_identity_check(std::int64_t n, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("pair identity: m must be at least 1");
  const Dyadic lhs = ib_exact({n, m}) + ib_exact({n - 1, m});
  const Dyadic rhs = ib_exact({n, m + 1}).twice();
  return lhs == rhs;
}

}  // namespace martight
