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

#include "zonesel/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_set>

#include "zonesel/influence.hpp"
#include "zonesel/ingest.hpp"

namespace zonesel {

std::vector<std::string> ValidateGenParams(const GenParams& p) {
  std::vector<std::string> out;
  if (p.n_slots == 0 || p.n_users == 0 || p.n_zones == 0) {
    out.push_back("slot, user and zone counts must be positive");
  }
  if (!(p.coverage_density >= 0.0)) out.push_back("coverage density must be >= 0");
  if (!(p.prob_min > 0.0 && p.prob_min <= p.prob_max && p.prob_max <= 1.0)) {
    out.push_back("probability range must satisfy 0 < min <= max <= 1");
  }
  if (!(p.cost_delta_min > 0.0 && p.cost_delta_min <= p.cost_delta_max)) {
    out.push_back("cost delta range must be positive and ordered");
  }
  if (!(p.demand_fraction >= 0.0 && p.demand_fraction <= 1.0)) {
    out.push_back("demand fraction must be in [0, 1]");
  }
  if (!(p.budget_fraction >= 0.0 && p.budget_fraction <= 1.0)) {
    out.push_back("budget fraction must be in [0, 1]");
  }
  return out;
}

GeneratedInstance Generate(const GenParams& params) {
  auto problems = ValidateGenParams(params);
  if (!problems.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "invalid generator params: " + problems[0]);
  }
  std::mt19937_64 rng(params.seed);
  std::uniform_int_distribution<std::size_t> zone_draw(0, params.n_zones - 1);
  std::uniform_int_distribution<UserId> user_draw(
      0, static_cast<UserId>(params.n_users - 1));
  std::uniform_real_distribution<double> prob_draw(params.prob_min, params.prob_max);
  std::poisson_distribution<std::size_t> size_draw(params.coverage_density);

  std::vector<Slot> slots(params.n_slots);
  std::vector<std::vector<Exposure>> rows(params.n_slots);
  for (std::size_t i = 0; i < params.n_slots; ++i) {
    slots[i].slot_id = static_cast<SlotId>(i);
    slots[i].billboard_id = static_cast<std::int64_t>(i);
    slots[i].time_index = 0;
    slots[i].zone_id = static_cast<int>(zone_draw(rng));

    std::size_t k = params.coverage_density > 0.0 ? size_draw(rng) : 0;
    k = std::min(k, params.n_users);
    std::unordered_set<UserId> chosen;
    std::vector<UserId> users;
    users.reserve(k);
    while (users.size() < k) {
      UserId u = user_draw(rng);
      if (chosen.insert(u).second) users.push_back(u);
    }
    std::sort(users.begin(), users.end());
    for (UserId u : users) {
      double p = prob_draw(rng);
      if (p <= 0.0) p = params.prob_min;
      rows[i].push_back({u, p});
    }
  }

  std::vector<Zone> zones(params.n_zones);
  for (std::size_t j = 0; j < params.n_zones; ++j) {
    zones[j].zone_id = static_cast<int>(j);
    zones[j].bbox = {static_cast<double>(j), static_cast<double>(j + 1), 0.0, 1.0};
  }

  InfluenceMatrix matrix(params.n_users, std::move(rows));
  slots = AssignCosts(std::move(slots), matrix, params.cost_delta_min,
                      params.cost_delta_max, rng());

  Instance instance(std::move(slots), std::move(zones), std::move(matrix));
  Demand demand =
      ProportionalDemand(instance, params.demand_fraction, params.budget_fraction);
  return GeneratedInstance{std::move(instance), std::move(demand)};
}

Demand ProportionalDemand(const Instance& inst, double demand_fraction,
                          double budget_fraction) {
  Demand demand;
  demand.sigma.assign(inst.num_zones(), 0.0);
  std::vector<std::vector<std::size_t>> by_zone(inst.num_zones());
  Cost total_cost = 0;
  for (std::size_t i = 0; i < inst.num_slots(); ++i) {
    const int z = inst.slot(i).zone_id;
    if (z >= 0 && static_cast<std::size_t>(z) < by_zone.size()) by_zone[z].push_back(i);
    total_cost += inst.slot(i).cost;
  }
  for (std::size_t j = 0; j < inst.num_zones(); ++j) {
    demand.sigma[j] = demand_fraction * InfluenceOfIndices(inst, by_zone[j]);
  }
  demand.budget =
      static_cast<Cost>(std::floor(budget_fraction * static_cast<double>(total_cost)));
  return demand;
}

GeneratedInstance ToyInstance() {
  const int sizes[] = {2, 3, 7, 5};
  const Cost costs[] = {100, 200, 400, 300};
  const int zone_of[] = {0, 0, 1, 2};

  std::vector<Slot> slots;
  std::vector<std::vector<Exposure>> rows;
  UserId next_user = 0;
  for (int i = 0; i < 4; ++i) {
    slots.push_back(Slot{i + 1, i + 1, 0, costs[i], zone_of[i]});
    std::vector<Exposure> row;
    for (int k = 0; k < sizes[i]; ++k) row.push_back({next_user++, 1.0});
    rows.push_back(std::move(row));
  }
  std::vector<Zone> zones;
  for (int j = 0; j < 3; ++j) {
    zones.push_back(Zone{j, {static_cast<double>(j), static_cast<double>(j + 1), 0.0, 1.0}});
  }
  return GeneratedInstance{
      Instance(std::move(slots), std::move(zones), InfluenceMatrix(next_user, std::move(rows))),
      Demand{{5.0, 7.0, 0.0}, 1000}};
}

}  // namespace zonesel
