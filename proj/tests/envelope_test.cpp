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

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "martight/oracles.hpp"
#include "martight/tight_bound.hpp"

namespace martight {
namespace {

Dyadic frac(long num, std::uint64_t log2_den) { return Dyadic(mpz_class(num), log2_den); }

// Random finite law on [-1, 1] with mean zero: a mixture of two-point laws
// {a, b} with a < 0 < b weighted b / (b - a) and -a / (b - a), plus an
// optional atom at zero.
std::vector<DiscreteAtom> random_mean_zero_step(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> side(0.05, 1.0);
  std::uniform_int_distribution<int> pairs(1, 3);
  const int count = pairs(rng);
  std::vector<double> weights(count + 1);
  double total = 0.0;
  for (double& w : weights) total += (w = side(rng));
  std::vector<DiscreteAtom> atoms;
  for (int i = 0; i < count; ++i) {
    const double a = -side(rng);
    const double b = side(rng);
    const double share = weights[i] / total;
    atoms.push_back({a, share * b / (b - a)});
    atoms.push_back({b, share * -a / (b - a)});
  }
  atoms.push_back({0.0, weights[count] / total});
  return atoms;
}

TEST(Envelope, Examples) {
  EXPECT_EQ(h_envelope({3, 5, 4.0}), 1.0);
  EXPECT_EQ(h_envelope({4, 2, 0.0}), 0.5);
  EXPECT_EQ(h_envelope({4, 2, 1.0}), 0.5);
  EXPECT_EQ(h_envelope({4, 2, 0.0}), g_recurrence(2, 2, 2).to_double());
  EXPECT_EQ(h_envelope_exact(4, 2, Dyadic(1)),
            (g_recurrence(2, 2, 2) + g_recurrence(3, 1, 2)).half());
  EXPECT_EQ(h_envelope({0, 3, 0.0}), 1.0);
  EXPECT_EQ(h_envelope({3, 5, -3.0}), 1.0);
}

TEST(Envelope, FloatAgreesWithExactAtDyadicPoints) {
  for (std::int64_t n = 1; n <= 8; ++n) {
    for (std::int64_t m = 0; m <= 16; ++m) {
      for (std::int64_t quarter = -4 * n - 4; quarter <= 4 * n + 4; ++quarter) {
        const Dyadic t(mpz_class(static_cast<long>(quarter)), 2);
        ASSERT_NEAR(h_envelope({n, m, t.to_double()}), h_envelope_exact(n, m, t).to_double(),
                    1e-14);
      }
    }
  }
}

TEST(Envelope, KnotsAreTheTightBound) {
  for (std::int64_t n = 0; n <= 8; ++n) {
    for (std::int64_t m = 0; m <= 16; ++m) {
      for (std::int64_t z = 0; z <= n; ++z) {
        ASSERT_EQ(h_envelope_exact(n, m, Dyadic(2 * z - n)), g_closed(z, n - z, m));
      }
    }
  }
}

TEST(Envelope, BoundedSymmetricAndContinuous) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t n = static_cast<std::int64_t>(rng() % 9);
    const std::int64_t m = static_cast<std::int64_t>(rng() % 17);
    std::uniform_real_distribution<double> anywhere(-n - 3.0, n + 3.0);
    const double t = anywhere(rng);
    const double h = h_envelope({n, m, t});
    ASSERT_GE(h, 0.0);
    ASSERT_LE(h, 1.0);
    ASSERT_NEAR(h, h_envelope({n, m, -t}), 1e-14);
    ASSERT_NEAR(h, h_envelope({n, m, t + 1e-9}), 1e-8);
  }
}

TEST(Envelope, ConvexAtKnots) {
  for (std::int64_t n = 1; n <= 8; ++n) {
    for (std::int64_t m = 0; m <= 16; ++m) {
      // Knot triples that stay inside |t| <= n.
      for (std::int64_t t = 2 - n; t <= n - 2; t += 2) {
        ASSERT_LE(h_envelope_exact(n, m, Dyadic(t)).twice(),
                  h_envelope_exact(n, m, Dyadic(t - 2)) + h_envelope_exact(n, m, Dyadic(t + 2)))
            << "n=" << n << " m=" << m << " t=" << t;
      }
    }
  }
}

TEST(Envelope, WeakRecurrenceEqualityInTheInterior) {
  for (std::int64_t n = 2; n <= 8; ++n) {
    for (std::int64_t m = 1; m <= 16; ++m) {
      for (std::int64_t half_steps = -2 * (n - 2); half_steps <= 2 * (n - 2); ++half_steps) {
        const Dyadic t(mpz_class(static_cast<long>(half_steps)), 1);
        const Dyadic rhs =
            (h_envelope_exact(n, m - 1, t - Dyadic(2)) + h_envelope_exact(n, m - 1, t + Dyadic(2)))
                .half();
        ASSERT_EQ(h_envelope_exact(n, m, t), rhs) << "n=" << n << " m=" << m << " t=" << t;
      }
    }
  }
}

TEST(Envelope, WeakRecurrenceInequalityNearTheEdge) {
  for (std::int64_t n = 1; n <= 8; ++n) {
    for (std::int64_t m = 1; m <= 16; ++m) {
      for (int k = 1; k < 20; ++k) {
        const double t = n - 2.0 + 2.0 * k / 20.0;
        const double gap = 0.5 * (n - t);
        const double rhs = 1.0 / (1.0 + gap) + gap / (1.0 + gap) * h_envelope({n, m - 1, t - 2.0});
        ASSERT_GE(h_envelope({n, m, t}) + 1e-12, rhs) << "n=" << n << " m=" << m << " t=" << t;
      }
    }
  }
}

TEST(EnvelopeStep, Examples) {
  const std::vector<DiscreteAtom> coin{{-1.0, 0.5}, {1.0, 0.5}};
  EXPECT_TRUE(envelope_step_check(4, 3, 0.0, coin));
  // Equality case: the interior recurrence is exact.
  EXPECT_EQ(h_envelope({4, 3, 0.0}),
            0.5 * (h_envelope({4, 2, -2.0}) + h_envelope({4, 2, 2.0})));
  const std::vector<DiscreteAtom> still{{0.0, 1.0}};
  EXPECT_TRUE(envelope_step_check(4, 3, 3.0, still));
  const double third = 1.0 / 3.0;
  const std::vector<DiscreteAtom> uniform{{-1.0, third}, {0.0, third}, {1.0, third}};
  EXPECT_TRUE(envelope_step_check(2, 5, 0.5, uniform));
}

TEST(EnvelopeStep, RandomMeanZeroSteps) {
  std::mt19937_64 rng(88);
  for (int i = 0; i < 300; ++i) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 8);
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 16);
    std::uniform_real_distribution<double> inside(-static_cast<double>(n), static_cast<double>(n));
    const double t = inside(rng);
    const auto step = random_mean_zero_step(rng);
    ASSERT_TRUE(envelope_step_check(n, m, t, step)) << "n=" << n << " m=" << m << " t=" << t;
  }
}

TEST(EnvelopeStep, RejectsInvalidLaws) {
  const std::vector<DiscreteAtom> biased{{-1.0, 0.4}, {1.0, 0.6}};
  EXPECT_THROW(envelope_step_check(3, 3, 0.0, biased), std::invalid_argument);
  const std::vector<DiscreteAtom> wide{{-2.0, 0.5}, {2.0, 0.5}};
  EXPECT_THROW(envelope_step_check(3, 3, 0.0, wide), std::invalid_argument);
  const std::vector<DiscreteAtom> short_mass{{-1.0, 0.4}, {1.0, 0.4}};
  EXPECT_THROW(envelope_step_check(3, 3, 0.0, short_mass), std::invalid_argument);
  const std::vector<DiscreteAtom> negative{{-1.0, -0.5}, {0.0, 2.0}, {1.0, -0.5}};
  EXPECT_THROW(envelope_step_check(3, 3, 0.0, negative), std::invalid_argument);
  EXPECT_THROW(envelope_step_check(3, 3, 0.0, std::vector<DiscreteAtom>{}), std::invalid_argument);
  const std::vector<DiscreteAtom> coin{{-1.0, 0.5}, {1.0, 0.5}};
  EXPECT_THROW(envelope_step_check(0, 3, 0.0, coin), std::invalid_argument);
  EXPECT_THROW(envelope_step_check(3, 0, 0.0, coin), std::invalid_argument);
}

TEST(Envelope, RejectsInvalidArguments) {
  EXPECT_THROW(h_envelope({-1, 2, 0.0}), std::invalid_argument);
  EXPECT_THROW(h_envelope({1, -2, 0.0}), std::invalid_argument);
  EXPECT_EQ(h_envelope_exact(2, 2, frac(1, 1)), h_envelope_exact(2, 2, frac(-1, 1)));
}

}  // namespace
}  // namespace martight
