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
#include <chrono>
#include <string>

#include "zonesel/solvers.hpp"

namespace zonesel {

const char* ToString(Estimator estimator) {
  return estimator == Estimator::kFast ? "fast" : "threshold";
}

const char* ToString(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kGreedy:
      return "greedy";
    case Algorithm::kBbs:
      return "bbs";
    case Algorithm::kBfbs:
      return "bfbs";
    case Algorithm::kTopK:
      return "topk";
    case Algorithm::kRandom:
      return "random";
    case Algorithm::kExact:
      return "exact";
  }
  return "unknown";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  for (Algorithm a : AllAlgorithms()) {
    if (name == ToString(a)) return a;
  }
  return std::nullopt;
}

std::vector<Algorithm> AllAlgorithms() {
  return {Algorithm::kGreedy, Algorithm::kBbs,    Algorithm::kBfbs,
          Algorithm::kTopK,   Algorithm::kRandom, Algorithm::kExact};
}

std::vector<std::string> ValidateConfig(const SolverConfig& config) {
  std::vector<std::string> out;
  if (!(config.theta > 0.0 && config.theta <= 1.0)) {
    out.push_back("theta must be in (0, 1]");
  }
  if (!(config.epsilon > 0.0)) out.push_back("epsilon must be positive");
  return out;
}

SelectionProblem::SelectionProblem(const Instance& instance,
                                   const Demand& demand)
    : instance_(&instance),
      demand_(&demand),
      singleton_(SingletonInfluences(instance)),
      zone_slots_(instance.num_zones()) {
  auto problems = ValidateDemand(instance, demand);
  if (!problems.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "invalid demand: " + problems[0]);
  }
  for (std::size_t i = 0; i < instance.num_slots(); ++i) {
    int z = instance.slot(i).zone_id;
    if (z < 0 || static_cast<std::size_t>(z) >= zone_slots_.size()) {
      throw Error(ErrorCode::kUnknownZone,
                  "slot " + std::to_string(instance.slot(i).slot_id) +
                      " references zone " + std::to_string(z));
    }
    if (instance.slot(i).cost < 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "slot " + std::to_string(instance.slot(i).slot_id) +
                      " has non-positive cost");
    }
    zone_slots_[z].push_back(i);
  }
}

std::vector<double> SelectionProblem::ResidualDemand(
    std::span<const std::size_t> partial) const {
  std::vector<double> zonal = ZonalInfluences(*instance_, partial);
  std::vector<double> out(demand_->sigma.size(), 0.0);
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = std::max(0.0, demand_->sigma[j] - zonal[j]);
  }
  return out;
}

std::vector<std::size_t> SelectionProblem::ByRatio(
    std::span<const std::size_t> slots) const {
  std::vector<std::size_t> out(slots.begin(), slots.end());
  std::sort(out.begin(), out.end(), [this](std::size_t a, std::size_t b) {
    double ra = singleton_ratio(a);
    double rb = singleton_ratio(b);
    if (ra != rb) return ra > rb;
    return id(a) < id(b);
  });
  return out;
}

RunRecord RunAlgorithm(Algorithm algorithm, const SelectionProblem& problem,
                       const SolverConfig& config) {
  RunRecord record;
  record.algorithm = algorithm;
  record.config = config;
  if (algorithm == Algorithm::kBbs) {
    record.config.estimator = Estimator::kThreshold;
  } else if (algorithm == Algorithm::kBfbs) {
    record.config.estimator = Estimator::kFast;
  }

  auto start = std::chrono::steady_clock::now();
  switch (algorithm) {
    case Algorithm::kGreedy:
      record.solution = SimpleGreedy(problem);
      break;
    case Algorithm::kBbs:
    case Algorithm::kBfbs: {
      BranchAndBoundResult bb = BranchAndBound(problem, record.config);
      record.solution = std::move(bb.solution);
      record.nodes_expanded = bb.nodes_expanded;
      record.node_budget_exhausted = bb.node_budget_exhausted;
      break;
    }
    case Algorithm::kTopK:
      record.solution = TopKBaseline(problem);
      break;
    case Algorithm::kRandom:
      record.solution = RandomBaseline(problem, config.seed);
      break;
    case Algorithm::kExact:
      record.solution = ExactBruteForce(problem);
      break;
  }
  auto stop = std::chrono::steady_clock::now();
  record.wall_time_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return record;
}

}  // namespace zonesel
