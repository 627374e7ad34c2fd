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

#ifndef MARTIGHT_ORACLES_HPP_
#define MARTIGHT_ORACLES_HPP_

#include <cstdint>
#include <vector>

#include "martight/dyadic.hpp"
#include "martight/tight_bound.hpp"

namespace martight {

// Absorption probabilities of the fair walk stopped at x and -y, for every
// split (x', s - x') of a fixed barrier distance s and every horizon up to
// max_steps. Built bottom-up from
//
//   P(x', k) = (P(x'-1, k-1) + P(x'+1, k-1)) / 2   for 0 < x' < s, k >= 1
//   P(0, k) = P(s, k) = 1,  P(x', 0) = 0 otherwise.
//
// Along the recursion x' + y' stays equal to s, so a table keyed by (x', k)
// covers all states.
class RecurrenceTable {
 public:
  RecurrenceTable(std::int64_t barrier_distance, std::int64_t max_steps);

  std::int64_t barrier_distance() const { return distance_; }
  std::int64_t max_steps() const { return steps_; }

  // P(upper, steps) with lower = barrier_distance - upper.
  const Dyadic& at(std::int64_t upper, std::int64_t steps) const;

 private:
  std::int64_t distance_;
  std::int64_t steps_;
  std::vector<Dyadic> cells_;  // row-major by steps
};

// Value of the recurrence for one (x, y, m).
Dyadic g_recurrence(std::int64_t x, std::int64_t y, std::int64_t m);

/**
 * Exact law of the stopped walk after `steps` steps. mass[p + y] is
 * P(X_steps = p) for p in -y..x. Interior mass moves +-1 with probability 1/2
 * each; mass on a barrier stays. With x = 0 or y = 0 the origin is itself a
 * barrier and nothing moves.
 */
struct WalkDistribution {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t steps = 0;
  std::vector<Dyadic> mass;

  const Dyadic& at(std::int64_t position) const { return mass.at(position + y); }
  Dyadic total() const;
};

// Upper bound on (x + y + 1) * m for walk_distribution.
inline constexpr std::int64_t kDefaultWalkBudget = 200'000'000;

// Throws ResourceError if (x + y + 1) * m exceeds budget, std::invalid_argument
// on negative arguments.
WalkDistribution walk_distribution(std::int64_t x, std::int64_t y, std::int64_t m,
                                   std::int64_t budget = kDefaultWalkBudget);

// Applies one more step in place.
void advance(WalkDistribution& d);

// Mass on the barriers; equals G(x, y, steps).
Dyadic hitting_mass(const WalkDistribution& d);

struct SimConfig {
  std::int64_t x = 0;
  LowerThreshold y;  // empty: upper barrier only
  std::int64_t m = 0;
  std::int64_t trials = 1;
  std::uint64_t seed = 0;
};

struct SimResult {
  std::int64_t hits = 0;
  std::int64_t trials = 0;
  double frequency = 0.0;
  double std_error = 0.0;  // sqrt(f (1 - f) / trials)
};

// 64 fair coin flips for steps [64 block, 64 block + 64) of one trial. Pure
// function of its key, so any partition of trials across workers reproduces
// the same walks.
std::uint64_t step_bits(std::uint64_t seed, std::uint64_t trial, std::uint64_t block);

// Runs cfg.trials independent stopped walks and counts those that end on a
// barrier. workers = 0 picks the hardware concurrency. The result does not
// depend on the number of workers.
SimResult simulate(const SimConfig& cfg, unsigned workers = 0);

}  // namespace martight

#endif  // MARTIGHT_ORACLES_HPP_
