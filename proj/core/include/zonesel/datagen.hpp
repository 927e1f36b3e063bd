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

#ifndef ZONESEL_DATAGEN_HPP_
#define ZONESEL_DATAGEN_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "zonesel/model.hpp"

namespace zonesel {

struct GenParams {
  std::size_t n_slots = 100;
  std::size_t n_users = 1000;
  std::size_t n_zones = 3;
  // Expected number of users covered by one slot (Poisson mean).
  double coverage_density = 50.0;
  double prob_min = 0.05;
  double prob_max = 0.5;
  double cost_delta_min = 0.8;
  double cost_delta_max = 1.1;
  // sigma_j as a fraction of I(all slots of zone j).
  double demand_fraction = 0.1;
  // Budget as a fraction of the total slot cost.
  double budget_fraction = 0.1;
  std::uint64_t seed = 0;
};

std::vector<std::string> ValidateGenParams(const GenParams& params);

struct GeneratedInstance {
  Instance instance;
  Demand demand;
};

// Random instance: zones drawn uniformly per slot, Poisson-sized user
// samples with uniform probabilities, costs from the ingest cost rule.
// Deterministic per seed. Throws Error(kInvalidArgument) for bad params.
GeneratedInstance Generate(const GenParams& params);

// sigma_j = demand_fraction * I(all slots of zone j);
// budget = floor(budget_fraction * total slot cost).
Demand ProportionalDemand(const Instance& instance, double demand_fraction,
                          double budget_fraction);

// The four-slot running example: singleton influences (2, 3, 7, 5) over
// disjoint unit-probability users, costs (100, 200, 400, 300), zones
// (0, 0, 1, 2), sigma = (5, 7, 0), budget 1000. Slot ids are 1..4.
GeneratedInstance ToyInstance();

}  // namespace zonesel

#endif  // ZONESEL_DATAGEN_HPP_
