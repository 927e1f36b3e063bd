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

// Slot selection algorithms under a budget and per-zone influence demands.
//
//   SimpleGreedy            two-strategy greedy (cost ratio vs. raw gain)
//   BranchAndBound          best-first search over include/exclude branches,
//                           bounded by FastBoundEstimation (BFBS) or
//                           ThresholdBoundEstimation (BBS)
//   TopKBaseline            highest singleton influence first
//   RandomBaseline          uniform choice among affordable slots
//   ExactBruteForce         subset enumeration, small instances only
//
// All solvers work on slot positions internally and report slot ids.

#ifndef ZONESEL_SOLVERS_HPP_
#define ZONESEL_SOLVERS_HPP_

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zonesel/influence.hpp"
#include "zonesel/model.hpp"

namespace zonesel {

enum class Estimator { kFast, kThreshold };

enum class Algorithm { kGreedy, kBbs, kBfbs, kTopK, kRandom, kExact };

const char* ToString(Estimator estimator);
const char* ToString(Algorithm algorithm);
std::optional<Algorithm> ParseAlgorithm(std::string_view name);
std::vector<Algorithm> AllAlgorithms();

struct SolverConfig {
  double theta = 0.7;
  double epsilon = 0.1;
  Estimator estimator = Estimator::kThreshold;
  std::uint64_t seed = 0;
  // Maximum number of popped search nodes; unset means unbounded.
  std::optional<std::size_t> node_budget;
};

// Empty when theta is in (0, 1] and epsilon > 0.
std::vector<std::string> ValidateConfig(const SolverConfig& config);

// e^-1 / (1 - e^-1): scales the incumbent density in the threshold
// schedule's stopping test.
inline constexpr double kThresholdStopFactor = 1.0 / (std::numbers::e - 1.0);

inline constexpr std::size_t kExactSlotLimit = 25;

// Per-solve precomputation shared by every algorithm. Holds references;
// the instance and demand must outlive it.
class SelectionProblem {
 public:
  // Throws Error(kInvalidArgument) when the demand does not fit the instance.
  SelectionProblem(const Instance& instance, const Demand& demand);
  SelectionProblem(Instance&&, const Demand&) = delete;
  SelectionProblem(const Instance&, Demand&&) = delete;
  SelectionProblem(Instance&&, Demand&&) = delete;

  const Instance& instance() const { return *instance_; }
  const Demand& demand() const { return *demand_; }
  Cost budget() const { return demand_->budget; }

  double singleton(std::size_t index) const { return singleton_[index]; }
  double singleton_ratio(std::size_t index) const {
    return singleton_[index] / static_cast<double>(instance_->slot(index).cost);
  }
  const std::vector<std::size_t>& zone_slots(std::size_t zone) const {
    return zone_slots_[zone];
  }
  SlotId id(std::size_t index) const { return instance_->slot(index).slot_id; }
  Cost cost(std::size_t index) const { return instance_->slot(index).cost; }

  // max(0, sigma_j - I_j(partial)) per zone.
  std::vector<double> ResidualDemand(std::span<const std::size_t> partial) const;

  // Slot positions ordered by singleton influence per cost, descending;
  // ties by lower slot id.
  std::vector<std::size_t> ByRatio(std::span<const std::size_t> slots) const;

 private:
  const Instance* instance_;
  const Demand* demand_;
  std::vector<double> singleton_;
  std::vector<std::vector<std::size_t>> zone_slots_;
};

// Branch-and-bound frontier entry.
struct SearchNode {
  std::vector<std::size_t> partial;
  Cost partial_cost = 0;
  // Ordered by branching priority; disjoint from `partial`.
  std::vector<std::size_t> unexplored;
  std::vector<double> remaining_demand;
  double upper = 0.0;
};

// Output of a bound estimator for one search node.
struct BoundResult {
  // Partial set followed by the slots the estimator added, in order.
  std::vector<std::size_t> completion;
  Cost completion_cost = 0;
  double lower = 0.0;
  std::vector<double> residual_demand;
  double upper = 0.0;
  bool meets_demand = false;
  // Slot used for the fractional extension, if any remained.
  std::optional<std::size_t> extra_slot;
  // Starting threshold of the threshold schedule (0 for the fast estimator).
  double initial_threshold = 0.0;
};

// L + leftover * extra_gain / extra_cost, the fractional extension of a
// completion by one more slot.
double CompletionUpperBound(double lower, Cost leftover_budget,
                            double extra_gain, Cost extra_cost);

// base.influence() plus the optimum of the fractional knapsack whose items
// are the candidates' marginal gains with respect to `base`. By
// submodularity no completion of `base` drawn from `candidates` within
// `leftover_budget` can exceed it.
double FractionalRelaxationBound(const CoverageState& base,
                                 Cost leftover_budget,
                                 std::span<const std::size_t> candidates);

// Both estimators report `upper` as the larger of the completion's fractional
// extension and the fractional knapsack bound, the latter taken at the
// partial set and at the finished completion, whichever is smaller. Every
// completion of `partial` from `unexplored` stays below it.

// Completes `partial` greedily by largest resulting influence: first each
// zone with residual demand from its own slots, then the whole budget.
BoundResult FastBoundEstimation(const SelectionProblem& problem,
                                std::span<const std::size_t> partial,
                                std::span<const std::size_t> unexplored,
                                std::span<const double> residual_demand);

// Completes `partial` with a decreasing gain-per-cost threshold that starts
// at the best marginal ratio and is divided by (1 + epsilon) after every
// pass over the candidates.
BoundResult ThresholdBoundEstimation(const SelectionProblem& problem,
                                     std::span<const std::size_t> partial,
                                     std::span<const std::size_t> unexplored,
                                     std::span<const double> residual_demand,
                                     double epsilon);

BoundResult EstimateBound(const SelectionProblem& problem,
                          const SolverConfig& config,
                          std::span<const std::size_t> partial,
                          std::span<const std::size_t> unexplored,
                          std::span<const double> residual_demand);

struct GreedyOutcome {
  Solution ratio_strategy;
  Solution gain_strategy;
  // Whichever of the two has strictly larger influence; ratio on ties.
  Solution chosen;
};

GreedyOutcome SimpleGreedyDetailed(const SelectionProblem& problem);
Solution SimpleGreedy(const SelectionProblem& problem);

Solution TopKBaseline(const SelectionProblem& problem);
Solution RandomBaseline(const SelectionProblem& problem, std::uint64_t seed);

// Best demand-satisfying subset, ties to the lexicographically smallest id
// set. Reports an empty infeasible solution when nothing satisfies the
// demand. Throws Error(kTooLarge) above kExactSlotLimit slots.
Solution ExactBruteForce(const SelectionProblem& problem);

struct BranchAndBoundResult {
  Solution solution;
  std::size_t nodes_expanded = 0;
  bool node_budget_exhausted = false;
  double root_upper = 0.0;
};

// Throws Error(kInvalidArgument) for an invalid config.
BranchAndBoundResult BranchAndBound(const SelectionProblem& problem,
                                    const SolverConfig& config);

// One timed solver invocation.
struct RunRecord {
  Algorithm algorithm = Algorithm::kGreedy;
  SolverConfig config;
  Solution solution;
  std::size_t nodes_expanded = 0;
  bool node_budget_exhausted = false;
  double wall_time_ms = 0.0;
};

// bbs and bfbs override config.estimator. Random uses config.seed.
RunRecord RunAlgorithm(Algorithm algorithm, const SelectionProblem& problem,
                       const SolverConfig& config);

}  // namespace zonesel

#endif  // ZONESEL_SOLVERS_HPP_
