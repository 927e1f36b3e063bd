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

// Two-strategy greedy. Both strategies first serve each demanded zone from
// its own slots, then spend what is left of the budget on any slot:
//
//   ratio strategy  picks the largest marginal gain per unit cost
//   gain strategy   picks the largest resulting influence
//
// and the better of the two is returned. With no zonal demand this is the
// cost-benefit greedy paired with a plain greedy whose first pick is the best
// affordable singleton, which gives the classical (1 - 1/e) / 2 guarantee.

#include <vector>

#include "zonesel/solvers.hpp"

namespace zonesel {
namespace {

enum class Rule { kRatio, kGain };

// Highest-scoring available slot among `slots`, or slots.size() if none.
std::size_t PickBest(const SelectionProblem& problem, const CoverageState& state,
                     const std::vector<std::size_t>& slots,
                     const std::vector<bool>& available, Rule rule) {
  std::size_t best = slots.size();
  double best_score = 0.0;
  for (std::size_t p = 0; p < slots.size(); ++p) {
    std::size_t s = slots[p];
    if (!available[s]) continue;
    double score = state.MarginalGain(s);
    if (rule == Rule::kRatio) score /= static_cast<double>(problem.cost(s));
    if (best == slots.size() || score > best_score ||
        (score == best_score && problem.id(s) < problem.id(slots[best]))) {
      best = p;
      best_score = score;
    }
  }
  return best;
}

Solution RunStrategy(const SelectionProblem& problem, Rule rule) {
  const Instance& instance = problem.instance();
  const Demand& demand = problem.demand();
  Cost remaining = problem.budget();
  CoverageState selected(instance);
  std::vector<bool> available(instance.num_slots(), true);

  for (std::size_t zone = 0; zone < instance.num_zones(); ++zone) {
    if (!demand.Demands(zone)) continue;
    const auto& zone_slots = problem.zone_slots(zone);
    // Gains in the zone phase are measured against the zone's own picks.
    CoverageState local(instance);
    while (local.influence() < demand.sigma[zone] - kDemandTolerance) {
      std::size_t p = PickBest(problem, local, zone_slots, available, rule);
      if (p == zone_slots.size()) break;
      std::size_t s = zone_slots[p];
      available[s] = false;
      if (problem.cost(s) <= remaining) {
        local.Commit(s);
        selected.Commit(s);
        remaining -= problem.cost(s);
      }
    }
  }

  std::vector<std::size_t> all(instance.num_slots());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  while (remaining > 0) {
    std::size_t p = PickBest(problem, selected, all, available, rule);
    if (p == all.size()) break;
    std::size_t s = all[p];
    available[s] = false;
    if (problem.cost(s) <= remaining) {
      selected.Commit(s);
      remaining -= problem.cost(s);
    }
  }
  return EvaluateIndices(instance, demand, selected.members());
}

}  // namespace

GreedyOutcome SimpleGreedyDetailed(const SelectionProblem& problem) {
  GreedyOutcome out;
  out.ratio_strategy = RunStrategy(problem, Rule::kRatio);
  out.gain_strategy = RunStrategy(problem, Rule::kGain);
  out.chosen = out.gain_strategy.total_influence >
                       out.ratio_strategy.total_influence
                   ? out.gain_strategy
                   : out.ratio_strategy;
  return out;
}

Solution SimpleGreedy(const SelectionProblem& problem) {
  return SimpleGreedyDetailed(problem).chosen;
}

}  // namespace zonesel
