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

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "martight/errors.hpp"
#include "support/path_enumeration.hpp"

namespace martight {
namespace {

using testing::hit_probability_by_enumeration;

Dyadic frac(long num, std::uint64_t log2_den) { return Dyadic(mpz_class(num), log2_den); }

TEST(GClosed, Examples) {
  EXPECT_EQ(g_closed(3, 0, 17), Dyadic(1));
  EXPECT_EQ(g_closed(2, 5, 0), Dyadic(0));
  EXPECT_EQ(g_closed(1, 1, 2), Dyadic(1));
  EXPECT_EQ(g_closed(2, 2, 2), frac(1, 1));
  EXPECT_EQ(g_closed(1, 2, 2), frac(3, 2));
  EXPECT_EQ(g_closed(0, 0, 9), Dyadic(1));
}

TEST(GClosed, MatchesPathEnumeration) {
  for (std::int64_t x = 0; x <= 5; ++x) {
    for (std::int64_t y = 0; y <= 5; ++y) {
      for (std::int64_t m = 0; m <= 14; ++m) {
        ASSERT_EQ(g_closed(x, y, m), hit_probability_by_enumeration(x, y, m))
            << "x=" << x << " y=" << y << " m=" << m;
      }
    }
  }
}

TEST(GClosed, Symmetry) {
  for (std::int64_t x = 0; x <= 8; ++x) {
    for (std::int64_t y = 0; y <= 8; ++y) {
      for (std::int64_t m = 0; m <= 64; ++m) {
        ASSERT_EQ(g_closed(x, y, m), g_closed(y, x, m));
      }
    }
  }
}

TEST(GClosed, BoundaryValues) {
  for (std::int64_t v = 0; v <= 8; ++v) {
    for (std::int64_t m = 0; m <= 64; ++m) {
      ASSERT_EQ(g_closed(v, 0, m), Dyadic(1));
      ASSERT_EQ(g_closed(0, v, m), Dyadic(1));
    }
  }
  for (std::int64_t x = 1; x <= 8; ++x) {
    for (std::int64_t y = 1; y <= 8; ++y) ASSERT_EQ(g_closed(x, y, 0), Dyadic(0));
  }
}

TEST(GClosed, OneStepRecurrence) {
  for (std::int64_t x = 1; x <= 8; ++x) {
    for (std::int64_t y = 1; y <= 8; ++y) {
      for (std::int64_t m = 1; m <= 64; ++m) {
        const Dyadic rhs = (g_closed(x - 1, y + 1, m - 1) + g_closed(x + 1, y - 1, m - 1)).half();
        ASSERT_EQ(g_closed(x, y, m), rhs) << "x=" << x << " y=" << y << " m=" << m;
      }
    }
  }
}

TEST(GClosed, ConvexAlongAntiDiagonal) {
  for (std::int64_t n = 2; n <= 16; ++n) {
    for (std::int64_t t = 1; t <= n - 1; ++t) {
      for (std::int64_t m = 0; m <= 64; ++m) {
        ASSERT_LE(g_closed(n - t, t, m).twice(),
                  g_closed(n - t - 1, t + 1, m) + g_closed(n - t + 1, t - 1, m));
      }
    }
  }
}

TEST(GClosed, NonDecreasingInHorizon) {
  for (std::int64_t x = 1; x <= 8; ++x) {
    for (std::int64_t y = 1; y <= 8; ++y) {
      for (std::int64_t m = 0; m < 64; ++m) ASSERT_LE(g_closed(x, y, m), g_closed(x, y, m + 1));
    }
  }
}

TEST(GClosed, FloatPathAgrees) {
  for (std::int64_t x : {1, 3, 7, 20}) {
    for (std::int64_t y : {1, 2, 9, 40}) {
      for (std::int64_t m : {0, 5, 64, 333, 2000}) {
        ASSERT_NEAR(g_closed_float(x, y, m), g_closed(x, y, m).to_double(), 1e-12);
      }
    }
  }
}

TEST(GClosed, ExactLimitIsEnforced) {
  EXPECT_THROW(g_closed(3, 3, 5000), ResourceError);
  EXPECT_THROW(g_closed(3, 3, 11, ExactLimit{10}), ResourceError);
  EXPECT_NO_THROW(g_closed(3, 3, 10, ExactLimit{10}));
  // Trivial corners never touch the binomial sums.
  EXPECT_EQ(g_closed(0, 3, 1'000'000), Dyadic(1));
  EXPECT_THROW(g_closed(-1, 3, 4), std::invalid_argument);
  EXPECT_THROW(g_closed(1, 3, -4), std::invalid_argument);
}

TEST(GOneSided, Examples) {
  EXPECT_EQ(g_one_sided(1, 1), frac(1, 1));
  EXPECT_EQ(g_one_sided(2, 2), frac(1, 2));
  EXPECT_EQ(g_one_sided(5, 0), Dyadic(0));
  EXPECT_EQ(g_one_sided(0, 7), Dyadic(1));
  EXPECT_EQ(g_one_sided(2, 4), frac(3, 3));
  EXPECT_EQ(g_one_sided(3, 9), frac(11, 5));
}

TEST(GOneSided, MatchesPathEnumeration) {
  for (std::int64_t x = 0; x <= 8; ++x) {
    for (std::int64_t m = 0; m <= 16; ++m) {
      ASSERT_EQ(g_one_sided(x, m), hit_probability_by_enumeration(x, std::nullopt, m));
    }
  }
}

TEST(GOneSided, IsTheLimitOfAFarLowerBarrier) {
  // A lower barrier farther than m steps is never reached.
  for (std::int64_t x = 1; x <= 8; ++x) {
    for (std::int64_t m = 0; m <= 40; ++m) ASSERT_EQ(g_one_sided(x, m), g_closed(x, m + 1, m));
  }
}

TEST(CorollaryBound, Examples) {
  EXPECT_EQ(corollary_bound(2, 2, 2), frac(1, 1));
  EXPECT_EQ(corollary_bound(1, 1, 2), Dyadic(1));
  EXPECT_EQ(corollary_bound(1, 1, 2), g_closed(1, 1, 2));
  EXPECT_EQ(corollary_bound(1, 1, 1), Dyadic(1));
}

TEST(CorollaryBound, DominatesTightBound) {
  for (std::int64_t x = 1; x <= 8; ++x) {
    for (std::int64_t y = 1; y <= 8; ++y) {
      for (std::int64_t m = 0; m <= 64; ++m) ASSERT_GE(corollary_bound(x, y, m), g_closed(x, y, m));
    }
  }
  // Raw sum is not clamped.
  EXPECT_GT(corollary_bound(1, 1, 3), Dyadic(1));
}

TEST(Azuma, Examples) {
  EXPECT_EQ(azuma_one(0.0, 10, 1.0), 1.0);
  EXPECT_NEAR(azuma_one(10.0, 100, 1.0), 0.60653065971263342, 1e-15);
  EXPECT_NEAR(azuma_one(10.0, 100, 2.0), 0.88249690258459540, 1e-15);
  EXPECT_NEAR(azuma_two(1.0, 100, 1.0), 1.9900249583853646, 1e-15);
  EXPECT_NEAR(azuma_two(10.0, 100, 1.0), 1.2130613194252668, 1e-15);
  EXPECT_NEAR(azuma_two(30.0, 100, 1.0), 0.022217993076484613, 1e-15);
  EXPECT_THROW(azuma_one(1.0, 0, 1.0), std::invalid_argument);
  EXPECT_THROW(azuma_one(-1.0, 3, 1.0), std::invalid_argument);
  EXPECT_THROW(azuma_two(1.0, 3, 0.0), std::invalid_argument);
}

TEST(Azuma, DominatesTightBoundsOnSample) {
  // Full 1 <= x <= m <= 200 grid runs in the acceptance suite.
  for (std::int64_t m = 1; m <= 120; m += 7) {
    for (std::int64_t x = 1; x <= m; ++x) {
      ASSERT_LE(g_one_sided(x, m).to_double(), azuma_one(x, m, 1.0) + 1e-12);
      ASSERT_LE(g_closed(x, x, m).to_double(), azuma_two(x, m, 1.0) + 1e-12);
    }
  }
}

TEST(BoundReport, TwoSidedExample) {
  const BoundReport r = bound_report({2, 2, 2, 1.0});
  ASSERT_TRUE(r.exact);
  EXPECT_EQ(*r.tight, frac(1, 1));
  EXPECT_EQ(*r.corollary, frac(1, 1));
  EXPECT_EQ(r.tight_float, 0.5);
  EXPECT_NEAR(r.azuma_two, 2.0 * std::exp(-1.0), 1e-15);
  EXPECT_NEAR(r.azuma_two, 0.735759, 1e-6);
  EXPECT_NEAR(r.azuma_one, std::exp(-1.0), 1e-15);
  EXPECT_EQ(r.azuma_two_clamped, r.azuma_two);
}

TEST(BoundReport, BothThresholdsZero) {
  const BoundReport r = bound_report({0, 0, 5, 1.0});
  EXPECT_EQ(*r.tight, Dyadic(1));
  EXPECT_EQ(r.azuma_one, 1.0);
  EXPECT_EQ(r.azuma_two_clamped, 1.0);
}

TEST(BoundReport, OneSidedWithScaledJumps) {
  const BoundReport r = bound_report({3, std::nullopt, 9, 0.5});
  EXPECT_EQ(*r.tight, g_one_sided(3, 9));
  EXPECT_EQ(*r.tight, hit_probability_by_enumeration(3, std::nullopt, 9));
  EXPECT_EQ(*r.corollary, *r.tight);
  // The event is X_9 - X_0 >= 3 c = 1.5; Azuma gives exp(-1.5^2 / (2 9 0.25)).
  EXPECT_NEAR(r.azuma_one, std::exp(-0.5), 1e-15);
  EXPECT_LE(r.tight_float, r.azuma_one);
}

TEST(BoundReport, InvariantsOverGrid) {
  for (std::int64_t x = 0; x <= 6; ++x) {
    for (std::int64_t y = 0; y <= 6; ++y) {
      for (std::int64_t m = 0; m <= 30; m += 3) {
        const BoundReport r = bound_report({x, y, m, 1.0});
        ASSERT_GE(r.tight_float, 0.0);
        ASSERT_LE(r.tight_float, 1.0);
        ASSERT_GE(*r.corollary, *r.tight);
        ASSERT_EQ(r.corollary_clamped, std::min(1.0, r.corollary_float));
        ASSERT_EQ(r.azuma_two_clamped, std::min(1.0, r.azuma_two));
      }
    }
  }
}

TEST(BoundReport, ModesAndLimits) {
  EXPECT_THROW(bound_report({3, 3, 5000, 1.0}, EvalMode::kExact), ResourceError);
  const BoundReport automatic = bound_report({3, 3, 5000, 1.0});
  EXPECT_FALSE(automatic.exact);
  EXPECT_FALSE(automatic.tight.has_value());
  EXPECT_NEAR(automatic.tight_float, g_closed_float(3, 3, 5000), 0.0);
  EXPECT_GT(automatic.tight_float, 0.9);
  const BoundReport floating = bound_report({3, 4, 40, 1.0}, EvalMode::kFloat);
  EXPECT_NEAR(floating.tight_float, g_closed(3, 4, 40).to_double(), 1e-12);
  EXPECT_THROW(bound_report({1, 1, 1, 0.0}), std::invalid_argument);
  EXPECT_THROW(bound_report({1, -1, 1, 1.0}), std::invalid_argument);
  // m = 0: no movement, Azuma in its limit.
  const BoundReport still = bound_report({2, 3, 0, 1.0});
  EXPECT_EQ(*still.tight, Dyadic(0));
  EXPECT_EQ(still.azuma_one, 0.0);
}

TEST(Thresholds, FloorIntoJumpUnits) {
  EXPECT_EQ(threshold_in_units(3.0, 1.0), 3);
  EXPECT_EQ(threshold_in_units(2.99, 1.0), 2);
  EXPECT_EQ(threshold_in_units(1.6, 0.5), 3);
  EXPECT_EQ(threshold_in_units(0.0, 0.7), 0);
  EXPECT_THROW(threshold_in_units(-0.1, 1.0), std::invalid_argument);
  EXPECT_THROW(threshold_in_units(1.0, 0.0), std::invalid_argument);
}

}  // namespace
}  // namespace martight
