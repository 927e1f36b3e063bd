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

#include <gtest/gtest.h>

#include <chrono>

#include "oracle.hpp"
#include "zonesel/datagen.hpp"
#include "zonesel/influence.hpp"
#include "zonesel/io.hpp"
#include "zonesel/solvers.hpp"

namespace zonesel {
namespace {

std::vector<SlotId> AllIds(const Instance& inst) {
  std::vector<SlotId> ids;
  for (std::size_t i = 0; i < inst.num_slots(); ++i) ids.push_back(inst.slot(i).slot_id);
  return ids;
}

TEST(ToyInstance, MatchesTable) {
  auto toy = ToyInstance();
  EXPECT_EQ(SingletonInfluences(toy.instance), (std::vector<double>{2, 3, 7, 5}));
  std::vector<Cost> costs;
  std::vector<int> zones;
  for (std::size_t i = 0; i < 4; ++i) {
    costs.push_back(toy.instance.slot(i).cost);
    zones.push_back(toy.instance.slot(i).zone_id);
  }
  EXPECT_EQ(costs, (std::vector<Cost>{100, 200, 400, 300}));
  EXPECT_EQ(zones, (std::vector<int>{0, 0, 1, 2}));
  EXPECT_EQ(toy.instance.num_users(), 17u);
  EXPECT_EQ(toy.demand.sigma, (std::vector<double>{5, 7, 0}));
  EXPECT_EQ(toy.demand.budget, 1000);
}

TEST(Generate, ZeroDemandFraction) {
  GenParams p;
  p.n_slots = 30;
  p.n_users = 200;
  p.demand_fraction = 0.0;
  auto g = Generate(p);
  for (double s : g.demand.sigma) EXPECT_EQ(s, 0.0);
  EXPECT_TRUE(Evaluate(g.instance, g.demand, {}).feasible);
}

TEST(Generate, FullFractionsMakeEverythingFeasible) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenParams p;
    p.n_slots = 40;
    p.n_users = 300;
    p.demand_fraction = 1.0;
    p.budget_fraction = 1.0;
    p.seed = seed;
    auto g = Generate(p);
    EXPECT_TRUE(Evaluate(g.instance, g.demand, AllIds(g.instance)).feasible) << seed;
  }
}

TEST(Generate, SigmaIsFractionOfZoneInfluence) {
  GenParams p;
  p.n_slots = 25;
  p.n_users = 100;
  p.n_zones = 2;
  p.demand_fraction = 0.4;
  auto g = Generate(p);
  for (int z = 0; z < 2; ++z) {
    std::vector<std::size_t> in_zone;
    for (std::size_t i = 0; i < g.instance.num_slots(); ++i) {
      if (g.instance.slot(i).zone_id == z) in_zone.push_back(i);
    }
    EXPECT_NEAR(g.demand.sigma[z], 0.4 * testing::OracleInfluence(g.instance, in_zone), 1e-9);
  }
  Cost total = 0;
  for (std::size_t i = 0; i < g.instance.num_slots(); ++i) total += g.instance.slot(i).cost;
  EXPECT_NEAR(static_cast<double>(g.demand.budget), 0.1 * static_cast<double>(total), 1.0);
}

TEST(Generate, AlwaysValidAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto a = testing::SmallRandomInstance(seed, 40);
    EXPECT_TRUE(ValidateInstance(a.instance).empty()) << seed;
    EXPECT_TRUE(ValidateDemand(a.instance, a.demand).empty()) << seed;
    auto b = testing::SmallRandomInstance(seed, 40);
    EXPECT_EQ(InstanceToJson(a.instance), InstanceToJson(b.instance));
    EXPECT_EQ(a.demand.sigma, b.demand.sigma);
    EXPECT_EQ(a.demand.budget, b.demand.budget);
  }
}

TEST(Generate, SmallExactRunIsQuick) {
  GenParams p;
  p.n_slots = 12;
  p.n_users = 50;
  p.n_zones = 2;
  p.seed = 7;
  auto g = Generate(p);
  SelectionProblem problem(g.instance, g.demand);
  auto start = std::chrono::steady_clock::now();
  ExactBruteForce(problem);
  std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  EXPECT_LT(took.count(), 1.0);
}

TEST(Generate, RejectsBadParams) {
  GenParams p;
  p.n_slots = 0;
  EXPECT_FALSE(ValidateGenParams(p).empty());
  EXPECT_THROW(Generate(p), Error);
  p = GenParams{};
  p.demand_fraction = 1.5;
  EXPECT_THROW(Generate(p), Error);
  p = GenParams{};
  p.prob_min = 0.6;
  p.prob_max = 0.5;
  EXPECT_FALSE(ValidateGenParams(p).empty());
}

}  // namespace
}  // namespace zonesel
