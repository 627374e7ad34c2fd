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

#include "martight/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "martight/errors.hpp"

namespace martight {
namespace {

void require_non_negative(std::int64_t v, const char* name) {
  if (v < 0) {
    throw std::invalid_argument(std::string(name) + " must be non-negative, got " +
                                std::to_string(v));
  }
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool run_trial(const SimConfig& cfg, std::uint64_t trial) {
  if (cfg.x == 0 || (cfg.y && *cfg.y == 0)) return true;
  std::int64_t position = 0;
  std::uint64_t bits = 0;
  for (std::int64_t step = 0; step < cfg.m; ++step) {
    const auto offset = static_cast<std::uint64_t>(step) & 63U;
    if (offset == 0) bits = step_bits(cfg.seed, trial, static_cast<std::uint64_t>(step) >> 6);
    position += ((bits >> offset) & 1U) != 0 ? 1 : -1;
    if (position >= cfg.x) return true;
    if (cfg.y && position <= -*cfg.y) return true;
  }
  return false;
}

}  // namespace

RecurrenceTable::RecurrenceTable(std::int64_t barrier_distance, std::int64_t max_steps)
    : distance_(barrier_distance), steps_(max_steps) {
  require_non_negative(barrier_distance, "barrier distance");
  require_non_negative(max_steps, "steps");
  const std::int64_t width = distance_ + 1;
  cells_.resize(static_cast<std::size_t>(width * (steps_ + 1)));
  auto cell = [&](std::int64_t upper, std::int64_t k) -> Dyadic& {
    return cells_[static_cast<std::size_t>(k * width + upper)];
  };
  for (std::int64_t k = 0; k <= steps_; ++k) {
    // Either barrier at distance 0 means the walk starts absorbed.
    cell(0, k) = Dyadic(1);
    cell(distance_, k) = Dyadic(1);
    if (k == 0) continue;
    for (std::int64_t upper = 1; upper < distance_; ++upper) {
      cell(upper, k) = (cell(upper - 1, k - 1) + cell(upper + 1, k - 1)).half();
    }
  }
}

const Dyadic& RecurrenceTable::at(std::int64_t upper, std::int64_t steps) const {
  if (upper < 0 || upper > distance_ || steps < 0 || steps > steps_) {
    throw std::out_of_range("RecurrenceTable::at: index outside the table");
  }
  return cells_[static_cast<std::size_t>(steps * (distance_ + 1) + upper)];
}

Dyadic g_recurrence(std::int64_t x, std::int64_t y, std::int64_t m) {
  require_non_negative(x, "x");
  require_non_negative(y, "y");
  require_non_negative(m, "m");
  if (x == 0 || y == 0) return Dyadic(1);
  return RecurrenceTable(x + y, m).at(x, m);
}

Dyadic WalkDistribution::total() const {
  Dyadic sum;
  for (const Dyadic& p : mass) sum += p;
  return sum;
}

WalkDistribution walk_distribution(std::int64_t x, std::int64_t y, std::int64_t m,
                                   std::int64_t budget) {
  require_non_negative(x, "x");
  require_non_negative(y, "y");
  require_non_negative(m, "m");
  if (m > 0 && (x + y + 1) > budget / m) {
    throw ResourceError("walk distribution: " + std::to_string(x + y + 1) + " states x " +
                        std::to_string(m) + " steps exceeds budget " + std::to_string(budget));
  }
  WalkDistribution d{x, y, 0, std::vector<Dyadic>(static_cast<std::size_t>(x + y + 1))};
  d.mass[static_cast<std::size_t>(y)] = Dyadic(1);
  for (std::int64_t k = 0; k < m; ++k) advance(d);
  return d;
}

void advance(WalkDistribution& d) {
  ++d.steps;
  if (d.x == 0 || d.y == 0) return;
  const std::size_t top = d.mass.size() - 1;
  std::vector<Dyadic> next(d.mass.size());
  next[0] = d.mass[0];
  next[top] = d.mass[top];
  for (std::size_t i = 1; i < top; ++i) {
    if (d.mass[i].is_zero()) continue;
    const Dyadic half = d.mass[i].half();
    next[i - 1] += half;
    next[i + 1] += half;
  }
  d.mass = std::move(next);
}

Dyadic hitting_mass(const WalkDistribution& d) {
  // With x = 0 or y = 0 both barriers may coincide at the origin.
  if (d.x == 0) return d.at(0) + (d.y == 0 ? Dyadic{} : d.at(-d.y));
  return d.at(d.x) + d.at(-d.y);
}

std::uint64_t step_bits(std::uint64_t seed, std::uint64_t trial, std::uint64_t block) {
  std::uint64_t h = mix64(seed ^ 0x9e3779b97f4a7c15ULL);
  h = mix64(h + trial * 0xd1b54a32d192ed03ULL);
  return mix64(h ^ (block * 0xabc98388fb8fac03ULL + 0x8cb92ba72f3d8dd7ULL));
}

SimResult simulate(const SimConfig& cfg, unsigned workers) {
  require_non_negative(cfg.x, "x");
  if (cfg.y) require_non_negative(*cfg.y, "y");
  require_non_negative(cfg.m, "m");
  if (cfg.trials < 1) throw std::invalid_argument("simulate: trials must be at least 1");

  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  const auto total = static_cast<std::uint64_t>(cfg.trials);
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));

  std::vector<std::int64_t> hits(workers, 0);
  auto count_range = [&](unsigned worker) {
    const std::uint64_t begin = total * worker / workers;
    const std::uint64_t end = total * (worker + 1) / workers;
    std::int64_t local = 0;
    for (std::uint64_t trial = begin; trial < end; ++trial) local += run_trial(cfg, trial) ? 1 : 0;
    hits[worker] = local;
  };
  if (workers == 1) {
    count_range(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(count_range, w);
  }

  SimResult result;
  result.trials = cfg.trials;
  for (std::int64_t h : hits) result.hits += h;
  result.frequency = static_cast<double>(result.hits) / static_cast<double>(result.trials);
  result.std_error = std::sqrt(result.frequency * (1.0 - result.frequency) /
                               static_cast<double>(result.trials));
  return result;
}

}  // namespace martight
