// Copyright 2026 The Zonesel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <random>
#include <vector>

#include "zonesel/solvers.hpp"

namespace zonesel {
namespace {

std::vector<std::size_t> BySingleton(const SelectionProblem& problem,
                                     std::vector<std::size_t> slots) {
  std::sort(slots.begin(), slots.end(), [&](std::size_t a, std::size_t b) {
    if (problem.singleton(a) != problem.singleton(b)) {
      return problem.singleton(a) > problem.singleton(b);
    }
    return problem.id(a) < problem.id(b);
  });
  return slots;
}

}  // namespace

Solution TopKBaseline(const SelectionProblem& problem) {
  const Instance& instance = problem.instance();
  const Demand& demand = problem.demand();
  Cost remaining = problem.budget();
  CoverageState selected(instance);

  for (std::size_t zone = 0; zone < instance.num_zones(); ++zone) {
    if (!demand.Demands(zone)) continue;
    CoverageState local(instance);
    for (std::size_t s : BySingleton(problem, problem.zone_slots(zone))) {
      if (local.influence() >= demand.sigma[zone] - kDemandTolerance) break;
      if (problem.cost(s) > remaining) continue;
      local.Commit(s);
      selected.Commit(s);
      remaining -= problem.cost(s);
    }
  }

  std::vector<std::size_t> all(instance.num_slots());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  for (std::size_t s : BySingleton(problem, std::move(all))) {
    if (remaining <= 0) break;
    if (selected.Contains(s) || problem.cost(s) > remaining) continue;
    selected.Commit(s);
    remaining -= problem.cost(s);
  }
  return EvaluateIndices(instance, demand, selected.members());
}

Solution RandomBaseline(const SelectionProblem& problem, std::uint64_t seed) {
  const Instance& instance = problem.instance();
  const Demand& demand = problem.demand();
  std::mt19937_64 rng(seed);
  Cost remaining = problem.budget();
  CoverageState selected(instance);

  // Draws uniformly from the still-affordable members of `pool`, discarding
  // slots that no longer fit. Returns false once nothing fits.
  auto draw = [&](std::vector<std::size_t>& pool, std::size_t& out) {
    std::erase_if(pool, [&](std::size_t s) {
      return selected.Contains(s) || problem.cost(s) > remaining;
    });
    if (pool.empty()) return false;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::size_t p = pick(rng);
    out = pool[p];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(p));
    return true;
  };

  for (std::size_t zone = 0; zone < instance.num_zones(); ++zone) {
    if (!demand.Demands(zone)) continue;
    CoverageState local(instance);
    std::vector<std::size_t> pool = problem.zone_slots(zone);
    std::size_t s = 0;
    while (local.influence() < demand.sigma[zone] - kDemandTolerance &&
           draw(pool, s)) {
      local.Commit(s);
      selected.Commit(s);
      remaining -= problem.cost(s);
    }
  }

  std::vector<std::size_t> pool(instance.num_slots());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
  std::size_t s = 0;
  while (draw(pool, s)) {
    selected.Commit(s);
    remaining -= problem.cost(s);
  }
  return EvaluateIndices(instance, demand, selected.members());
}

}  // namespace zonesel
