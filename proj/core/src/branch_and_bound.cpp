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

// Best-first branch and bound. The frontier is a max-heap on node upper
// bounds. Each popped node branches on one pivot slot, the unexplored slot
// with the best singleton influence per cost, into an include child (when
// the pivot fits) and an exclude child. Every child is handed to the bound
// estimator; its completion is an incumbent candidate and its upper bound
// decides whether the child enters the heap. Search stops once the best
// demand-satisfying completion reaches theta times the largest outstanding
// upper bound.

#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "zonesel/solvers.hpp"

namespace zonesel {
namespace {

struct Entry {
  SearchNode node;
  std::uint64_t seq = 0;
};

struct EntryOrder {
  // Max-heap on upper; earlier insertions first among equal bounds.
  bool operator()(const Entry& a, const Entry& b) const {
    if (a.node.upper != b.node.upper) return a.node.upper < b.node.upper;
    return a.seq > b.seq;
  }
};

struct Incumbent {
  std::vector<std::size_t> completion;
  double value = 0.0;
};

class Search {
 public:
  Search(const SelectionProblem& problem, const SolverConfig& config)
      : problem_(problem), config_(config) {}

  BranchAndBoundResult Run() {
    const Instance& instance = problem_.instance();
    const Cost budget = problem_.budget();

    std::vector<std::size_t> affordable;
    for (std::size_t i = 0; i < instance.num_slots(); ++i) {
      if (problem_.cost(i) <= budget) affordable.push_back(i);
    }
    BranchAndBoundResult result;
    result.root_upper = Consider({}, 0, problem_.ByRatio(affordable));

    while (!heap_.empty()) {
      const double outstanding = heap_.top().node.upper;
      if (feasible_ && feasible_->value >= config_.theta * outstanding) break;
      if (config_.node_budget && result.nodes_expanded >= *config_.node_budget) {
        result.node_budget_exhausted = true;
        break;
      }
      SearchNode node = heap_.top().node;
      heap_.pop();
      ++result.nodes_expanded;
      if (node.upper <= BestFeasibleValue() && feasible_) continue;
      if (node.unexplored.empty()) continue;

      const std::size_t pivot = node.unexplored.front();
      std::vector<std::size_t> rest(node.unexplored.begin() + 1,
                                    node.unexplored.end());
      if (node.partial_cost + problem_.cost(pivot) <= budget) {
        std::vector<std::size_t> with = node.partial;
        with.push_back(pivot);
        const Cost with_cost = node.partial_cost + problem_.cost(pivot);
        std::vector<std::size_t> with_rest;
        with_rest.reserve(rest.size());
        for (std::size_t s : rest) {
          if (with_cost + problem_.cost(s) <= budget) with_rest.push_back(s);
        }
        Consider(std::move(with), with_cost, std::move(with_rest));
      }
      Consider(std::move(node.partial), node.partial_cost, std::move(rest));
    }

    const Incumbent* best = feasible_ ? &*feasible_ : (any_ ? &*any_ : nullptr);
    std::vector<std::size_t> chosen;
    if (best != nullptr) chosen = best->completion;
    result.solution = EvaluateIndices(instance, problem_.demand(), chosen);
    return result;
  }

 private:
  double BestFeasibleValue() const { return feasible_ ? feasible_->value : 0.0; }

  // Estimates a child, records its completion, and pushes it when it may
  // still beat the incumbent. Returns the child's upper bound.
  double Consider(std::vector<std::size_t> partial, Cost partial_cost,
                  std::vector<std::size_t> unexplored) {
    std::vector<double> residual = problem_.ResidualDemand(partial);
    BoundResult bound =
        EstimateBound(problem_, config_, partial, unexplored, residual);

    if (bound.meets_demand &&
        (!feasible_ || bound.lower > feasible_->value)) {
      feasible_ = Incumbent{bound.completion, bound.lower};
    }
    if (!any_ || bound.lower > any_->value) {
      any_ = Incumbent{bound.completion, bound.lower};
    }

    const bool improvable = !feasible_ || bound.upper > feasible_->value;
    if (improvable && ZonesReachable(partial, unexplored, residual)) {
      Entry entry;
      entry.node.partial = std::move(partial);
      entry.node.partial_cost = partial_cost;
      entry.node.unexplored = std::move(unexplored);
      entry.node.remaining_demand = std::move(residual);
      entry.node.upper = bound.upper;
      entry.seq = next_seq_++;
      heap_.push(std::move(entry));
    }
    return bound.upper;
  }

  // False when some zone cannot reach its demand even with every remaining
  // slot of that zone, so no completion in the subtree is feasible.
  bool ZonesReachable(const std::vector<std::size_t>& partial,
                      const std::vector<std::size_t>& unexplored,
                      const std::vector<double>& residual) const {
    const Instance& instance = problem_.instance();
    for (std::size_t zone = 0; zone < residual.size(); ++zone) {
      if (residual[zone] <= kDemandTolerance) continue;
      std::vector<std::size_t> reach;
      for (const auto* list : {&partial, &unexplored}) {
        for (std::size_t s : *list) {
          if (static_cast<std::size_t>(instance.slot(s).zone_id) == zone) {
            reach.push_back(s);
          }
        }
      }
      double best = InfluenceOfIndices(instance, reach);
      if (best < problem_.demand().sigma[zone] - kDemandTolerance) return false;
    }
    return true;
  }

  const SelectionProblem& problem_;
  const SolverConfig& config_;
  std::priority_queue<Entry, std::vector<Entry>, EntryOrder> heap_;
  std::uint64_t next_seq_ = 0;
  std::optional<Incumbent> feasible_;
  std::optional<Incumbent> any_;
};

}  // namespace

BranchAndBoundResult BranchAndBound(const SelectionProblem& problem,
                                    const SolverConfig& config) {
  auto problems = ValidateConfig(config);
  if (!problems.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "invalid config: " + problems[0]);
  }
  return Search(problem, config).Run();
}

}  // namespace zonesel
