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

// Bound estimators for the branch-and-bound search. Each one completes the
// node's partial set into a budget-feasible selection (the lower bound) and
// extends it fractionally into an upper bound.

#include <algorithm>
#include <limits>
#include <optional>
#include <utility>

#include "zonesel/solvers.hpp"

namespace zonesel {
namespace {

// Strictly better score, or equal score with a smaller slot id.
bool Prefer(double score, SlotId id, double best_score, SlotId best_id) {
  return score > best_score || (score == best_score && id < best_id);
}

// Zone-restricted coverage of `partial`, used to track zonal progress.
CoverageState ZoneState(const Instance& instance,
                        std::span<const std::size_t> partial, std::size_t zone) {
  CoverageState state(instance);
  for (std::size_t i : partial) {
    if (static_cast<std::size_t>(instance.slot(i).zone_id) == zone) {
      state.Commit(i);
    }
  }
  return state;
}

// Candidates of `unexplored` that are not already in `state`, deduplicated.
std::vector<std::size_t> CandidatePool(const CoverageState& state,
                                       std::span<const std::size_t> unexplored) {
  std::vector<std::size_t> pool;
  std::vector<bool> seen(state.instance().num_slots(), false);
  for (std::size_t i : unexplored) {
    if (state.Contains(i) || seen[i]) continue;
    seen[i] = true;
    pool.push_back(i);
  }
  return pool;
}

void Finish(const SelectionProblem& problem, const CoverageState& state,
            double relaxation, double line_bound, BoundResult& out) {
  out.completion = state.members();
  out.completion_cost = state.cost();
  out.lower = state.influence();
  out.residual_demand = problem.ResidualDemand(out.completion);
  out.meets_demand = true;
  for (double r : out.residual_demand) {
    if (r > kDemandTolerance) out.meets_demand = false;
  }
  out.upper = std::max({line_bound, relaxation, out.lower});
}

}  // namespace

double CompletionUpperBound(double lower, Cost leftover_budget,
                            double extra_gain, Cost extra_cost) {
  if (extra_cost <= 0 || leftover_budget <= 0) return lower;
  return lower + static_cast<double>(leftover_budget) * extra_gain /
                     static_cast<double>(extra_cost);
}

namespace {

// Marginal gains of `pool` with respect to `state`; zero for members.
std::vector<double> GainsOf(const CoverageState& state,
                            std::span<const std::size_t> pool) {
  std::vector<double> gains(pool.size(), 0.0);
  for (std::size_t k = 0; k < pool.size(); ++k) {
    if (!state.Contains(pool[k])) gains[k] = state.MarginalGain(pool[k]);
  }
  return gains;
}

// Fractional knapsack over items (gains[k], cost of pool[k]).
double KnapsackValue(const Instance& instance, Cost capacity,
                     std::span<const std::size_t> pool,
                     std::span<const double> gains) {
  struct Item {
    double gain;
    Cost cost;
  };
  std::vector<Item> items;
  items.reserve(pool.size());
  for (std::size_t k = 0; k < pool.size(); ++k) {
    Cost c = instance.slot(pool[k]).cost;
    if (c > capacity || !(gains[k] > 0.0)) continue;
    items.push_back({gains[k], c});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return a.gain * static_cast<double>(b.cost) >
           b.gain * static_cast<double>(a.cost);
  });
  double value = 0.0;
  Cost room = capacity;
  for (const Item& it : items) {
    if (it.cost <= room) {
      value += it.gain;
      room -= it.cost;
    } else {
      value += it.gain * static_cast<double>(room) / static_cast<double>(it.cost);
      break;
    }
  }
  return value;
}

}  // namespace

double FractionalRelaxationBound(const CoverageState& base,
                                 Cost leftover_budget,
                                 std::span<const std::size_t> candidates) {
  return base.influence() + KnapsackValue(base.instance(), leftover_budget, candidates,
                                          GainsOf(base, candidates));
}

namespace {

// Argmax of marginal gain with lazy re-evaluation. Gains only shrink as the
// state grows, so a stale entry that still tops the heap after being
// refreshed is the true argmax. Ties go to the smaller slot id.
class LazyArgmax {
 public:
  LazyArgmax(const SelectionProblem& problem, const CoverageState& state)
      : problem_(problem), state_(state) {}

  // `gain` is the slot's marginal gain when the state had `stamp` members.
  // Entries are heapified in bulk on the first Pop.
  void Push(std::size_t slot, double gain, std::size_t stamp) {
    heap_.push_back({gain, problem_.id(slot), slot, stamp});
    heapified_ = false;
  }

  // Best current gain among entries costing at most `max_cost`; costlier
  // entries are discarded unevaluated.
  std::optional<std::size_t> Pop(Cost max_cost = std::numeric_limits<Cost>::max()) {
    if (!heapified_) {
      std::make_heap(heap_.begin(), heap_.end(), Less);
      heapified_ = true;
    }
    while (!heap_.empty()) {
      std::pop_heap(heap_.begin(), heap_.end(), Less);
      Entry top = heap_.back();
      heap_.pop_back();
      if (problem_.cost(top.slot) > max_cost) continue;
      if (top.stamp == state_.members().size()) return top.slot;
      top.gain = state_.MarginalGain(top.slot);
      top.stamp = state_.members().size();
      heap_.push_back(top);
      std::push_heap(heap_.begin(), heap_.end(), Less);
    }
    return std::nullopt;
  }

 private:
  struct Entry {
    double gain;
    SlotId id;
    std::size_t slot;
    std::size_t stamp;
  };
  static bool Less(const Entry& a, const Entry& b) {
    return a.gain < b.gain || (a.gain == b.gain && a.id > b.id);
  }

  const SelectionProblem& problem_;
  const CoverageState& state_;
  std::vector<Entry> heap_;
  bool heapified_ = true;
};

}  // namespace

BoundResult FastBoundEstimation(const SelectionProblem& problem,
                                std::span<const std::size_t> partial,
                                std::span<const std::size_t> unexplored,
                                std::span<const double> residual_demand) {
  const Instance& instance = problem.instance();
  const Cost budget = problem.budget();

  CoverageState state(instance);
  for (std::size_t i : partial) {
    if (!state.Contains(i)) state.Commit(i);
  }
  std::vector<std::size_t> pool = CandidatePool(state, unexplored);
  const Cost room = budget - state.cost();
  const std::vector<double> base_gains = GainsOf(state, pool);
  const double relaxation =
      state.influence() + KnapsackValue(instance, room, pool, base_gains);
  // Gains at the partial set seed the heaps; later pops refresh them.
  const std::size_t seed_stamp = state.members().size();
  std::vector<double> seed(instance.num_slots(), 0.0);
  for (std::size_t k = 0; k < pool.size(); ++k) seed[pool[k]] = base_gains[k];

  // Slots already scanned, whether committed or passed over for budget.
  std::vector<bool> scanned(instance.num_slots(), false);

  for (std::size_t zone = 0; zone < instance.num_zones(); ++zone) {
    if (zone >= residual_demand.size() ||
        residual_demand[zone] <= kDemandTolerance) {
      continue;
    }
    CoverageState zone_state = ZoneState(instance, partial, zone);
    const double target = zone_state.influence() + residual_demand[zone];
    LazyArgmax candidates(problem, state);
    for (std::size_t s : pool) {
      if (!scanned[s] && static_cast<std::size_t>(instance.slot(s).zone_id) == zone) {
        candidates.Push(s, seed[s], seed_stamp);
      }
    }
    while (zone_state.influence() < target - kDemandTolerance) {
      auto b = candidates.Pop();
      if (!b) break;
      scanned[*b] = true;
      if (state.cost() + problem.cost(*b) <= budget) {
        state.Commit(*b);
        zone_state.Commit(*b);
      }
    }
  }

  // Global fill. Budget only shrinks, so a slot that does not fit now never
  // will.
  LazyArgmax candidates(problem, state);
  for (std::size_t s : pool) {
    if (!scanned[s]) candidates.Push(s, seed[s], seed_stamp);
  }
  while (state.cost() < budget) {
    auto b = candidates.Pop(budget - state.cost());
    if (!b) break;
    state.Commit(*b);
  }

  BoundResult out;
  double line_bound = state.influence();
  const std::vector<double> final_gains = GainsOf(state, pool);
  std::optional<std::size_t> extra;
  double extra_gain = 0.0;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    const std::size_t s = pool[k];
    if (state.Contains(s)) continue;
    if (!extra || Prefer(final_gains[k], problem.id(s), extra_gain, problem.id(*extra))) {
      extra = s;
      extra_gain = final_gains[k];
    }
  }
  if (extra) {
    out.extra_slot = extra;
    line_bound = CompletionUpperBound(state.influence(), budget - state.cost(),
                                      extra_gain, problem.cost(*extra));
  }
  const double tightened = std::min(
      relaxation, state.influence() + KnapsackValue(instance, room, pool, final_gains));
  Finish(problem, state, tightened, line_bound, out);
  return out;
}

namespace {

// One threshold-schedule phase over `order` (frozen scan order). Adds every
// affordable candidate whose gain per cost clears tau, stopping a pass at the
// first affordable candidate that does not. `zone_state`, when set, ends the
// phase as soon as its influence reaches `zone_target`.
class ThresholdPhase {
 public:
  ThresholdPhase(const SelectionProblem& problem, CoverageState& state,
                 double& tau, double epsilon)
      : problem_(problem), state_(state), tau_(tau), epsilon_(epsilon) {}

  void Run(std::vector<std::size_t>& order, double base_influence,
           Cost phase_budget, CoverageState* zone_state, double zone_target) {
    const Cost budget = problem_.budget();
    auto met = [&] {
      return zone_state != nullptr &&
             zone_state->influence() >= zone_target - kDemandTolerance;
    };
    auto stop = [&] {
      if (phase_budget <= 0) return true;
      double density =
          (state_.influence() - base_influence) / static_cast<double>(phase_budget);
      return tau_ <= density * kThresholdStopFactor;
    };

    while (!met()) {
      bool any_affordable = false;
      bool added = false;
      double blocking_ratio = 0.0;
      for (std::size_t p = 0; p < order.size();) {
        std::size_t b = order[p];
        Cost c = problem_.cost(b);
        if (state_.cost() + c > budget) {
          ++p;
          continue;
        }
        any_affordable = true;
        double ratio = state_.MarginalGain(b) / static_cast<double>(c);
        if (ratio >= tau_) {
          state_.Commit(b);
          if (zone_state != nullptr) zone_state->Commit(b);
          order.erase(order.begin() + static_cast<std::ptrdiff_t>(p));
          added = true;
          if (met()) return;
          continue;
        }
        blocking_ratio = ratio;
        break;
      }
      if (!any_affordable) return;
      tau_ /= 1.0 + epsilon_;
      if (stop()) return;
      if (!added) {
        // Nothing changed, so the same candidate blocks every pass until
        // tau drops to its ratio.
        if (blocking_ratio <= 0.0) return;
        while (blocking_ratio < tau_) {
          tau_ /= 1.0 + epsilon_;
          if (stop()) return;
        }
      }
    }
  }

 private:
  const SelectionProblem& problem_;
  CoverageState& state_;
  double& tau_;
  double epsilon_;
};

}  // namespace

BoundResult ThresholdBoundEstimation(const SelectionProblem& problem,
                                     std::span<const std::size_t> partial,
                                     std::span<const std::size_t> unexplored,
                                     std::span<const double> residual_demand,
                                     double epsilon) {
  if (!(epsilon > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be positive");
  }
  const Instance& instance = problem.instance();
  const Cost budget = problem.budget();

  CoverageState state(instance);
  for (std::size_t i : partial) {
    if (!state.Contains(i)) state.Commit(i);
  }
  std::vector<std::size_t> pool = CandidatePool(state, unexplored);
  const Cost room = budget - state.cost();
  const std::vector<double> base_gains = GainsOf(state, pool);
  const double relaxation =
      state.influence() + KnapsackValue(instance, room, pool, base_gains);

  double tau = 0.0;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    tau = std::max(tau, base_gains[k] / static_cast<double>(problem.cost(pool[k])));
  }
  BoundResult out;
  out.initial_threshold = tau;

  // Unaffordable slots can never be added and do not take part in scans.
  std::vector<std::size_t> order;
  for (std::size_t s : problem.ByRatio(pool)) {
    if (state.cost() + problem.cost(s) <= budget) order.push_back(s);
  }

  ThresholdPhase phase(problem, state, tau, epsilon);
  const double partial_influence = state.influence();
  const Cost partial_room = budget - state.cost();
  for (std::size_t zone = 0; zone < instance.num_zones(); ++zone) {
    if (zone >= residual_demand.size() ||
        residual_demand[zone] <= kDemandTolerance) {
      continue;
    }
    CoverageState zone_state = ZoneState(instance, partial, zone);
    const double target = zone_state.influence() + residual_demand[zone];
    std::vector<std::size_t> zone_order;
    for (std::size_t s : order) {
      if (static_cast<std::size_t>(instance.slot(s).zone_id) == zone) {
        zone_order.push_back(s);
      }
    }
    phase.Run(zone_order, partial_influence, partial_room, &zone_state, target);
  }

  std::erase_if(order, [&](std::size_t s) { return state.Contains(s); });
  phase.Run(order, state.influence(), budget - state.cost(), nullptr, 0.0);

  double line_bound = state.influence();
  const std::vector<double> final_gains = GainsOf(state, pool);
  std::optional<std::size_t> extra;
  double extra_gain = 0.0;
  double extra_ratio = 0.0;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    const std::size_t s = pool[k];
    if (state.Contains(s)) continue;
    double r = final_gains[k] / static_cast<double>(problem.cost(s));
    if (!extra || Prefer(r, problem.id(s), extra_ratio, problem.id(*extra))) {
      extra = s;
      extra_gain = final_gains[k];
      extra_ratio = r;
    }
  }
  if (extra) {
    out.extra_slot = extra;
    line_bound = CompletionUpperBound(state.influence(), budget - state.cost(),
                                      extra_gain, problem.cost(*extra));
  }
  const double tightened = std::min(
      relaxation, state.influence() + KnapsackValue(instance, room, pool, final_gains));
  Finish(problem, state, tightened, line_bound, out);
  return out;
}

BoundResult EstimateBound(const SelectionProblem& problem,
                          const SolverConfig& config,
                          std::span<const std::size_t> partial,
                          std::span<const std::size_t> unexplored,
                          std::span<const double> residual_demand) {
  if (config.estimator == Estimator::kFast) {
    return FastBoundEstimation(problem, partial, unexplored, residual_demand);
  }
  return ThresholdBoundEstimation(problem, partial, unexplored, residual_demand,
                                  config.epsilon);
}

}  // namespace zonesel
