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

#include <algorithm>

#include "oracle.hpp"
#include "zonesel/datagen.hpp"
#include "zonesel/influence.hpp"
#include "zonesel/solvers.hpp"

namespace zonesel {
namespace {

const std::vector<SlotId> kToyAll{1, 2, 3, 4};

// Users [first, first + n) at probability 1.
std::vector<Exposure> Block(UserId first, UserId n) {
  std::vector<Exposure> row;
  for (UserId u = first; u < first + n; ++u) row.push_back({u, 1.0});
  return row;
}

TEST(Names, RoundTrip) {
  for (Algorithm a : AllAlgorithms()) {
    EXPECT_EQ(ParseAlgorithm(ToString(a)), a);
  }
  EXPECT_FALSE(ParseAlgorithm("nope").has_value());
  EXPECT_EQ(AllAlgorithms().size(), 6u);
}

TEST(SolverConfig, DefaultsAndValidation) {
  SolverConfig c;
  EXPECT_EQ(c.theta, 0.7);
  EXPECT_EQ(c.epsilon, 0.1);
  EXPECT_TRUE(ValidateConfig(c).empty());
  c.theta = 0.0;
  EXPECT_FALSE(ValidateConfig(c).empty());
  c.theta = 1.0;
  c.epsilon = 0.0;
  EXPECT_FALSE(ValidateConfig(c).empty());
}

TEST(SelectionProblem, RejectsMismatchedDemand) {
  auto toy = ToyInstance();
  Demand short_sigma{{5.0}, 1000};
  EXPECT_THROW(SelectionProblem(toy.instance, short_sigma), Error);
}

TEST(SelectionProblem, ResidualAndOrder) {
  auto toy = ToyInstance();
  SelectionProblem p(toy.instance, toy.demand);
  std::vector<std::size_t> b1{0};
  EXPECT_EQ(p.ResidualDemand(b1), (std::vector<double>{3.0, 7.0, 0.0}));
  std::vector<std::size_t> all{0, 1, 2, 3};
  // Ratios 0.02, 0.015, 0.0175, 0.0167.
  EXPECT_EQ(p.ByRatio(all), (std::vector<std::size_t>{0, 2, 3, 1}));
}

TEST(SimpleGreedy, Toy) {
  auto toy = ToyInstance();
  SelectionProblem p(toy.instance, toy.demand);
  Solution s = SimpleGreedy(p);
  EXPECT_EQ(s.selected, kToyAll);
  EXPECT_EQ(s.total_influence, 17.0);
  EXPECT_EQ(s.total_cost, 1000);
  EXPECT_TRUE(s.feasible);
}

TEST(SimpleGreedy, ZeroBudget) {
  auto toy = ToyInstance();
  Demand d{{0.0, 0.0, 0.0}, 0};
  SelectionProblem p(toy.instance, d);
  Solution s = SimpleGreedy(p);
  EXPECT_TRUE(s.selected.empty());
  EXPECT_EQ(s.total_influence, 0.0);
  EXPECT_TRUE(s.feasible);
}

TEST(SimpleGreedy, GainStrategyWinsOnHugeExpensiveSlot) {
  // Two cheap slots have the better ratio, but the expensive one alone is
  // worth far more than both.
  Instance inst({Slot{1, 1, 0, 10, 0}, Slot{2, 2, 0, 1, 0}, Slot{3, 3, 0, 1, 0}},
                {Zone{0, {}}}, InfluenceMatrix(130, {Block(0, 100), Block(100, 15),
                                                     Block(115, 15)}));
  Demand d{{0.0}, 10};
  SelectionProblem p(inst, d);
  GreedyOutcome out = SimpleGreedyDetailed(p);
  EXPECT_EQ(out.ratio_strategy.total_influence, 30.0);
  EXPECT_EQ(out.gain_strategy.total_influence, 100.0);
  EXPECT_EQ(out.chosen.selected, (std::vector<SlotId>{1}));
  EXPECT_EQ(SimpleGreedy(p).total_influence, 100.0);
}

TEST(SimpleGreedy, AtLeastBestAffordableSingleton) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = testing::SmallRandomInstance(seed, 8);
    g.demand.sigma.assign(g.demand.sigma.size(), 0.0);
    SelectionProblem p(g.instance, g.demand);
    double best_single = 0.0;
    for (std::size_t i = 0; i < g.instance.num_slots(); ++i) {
      if (p.cost(i) <= p.budget()) best_single = std::max(best_single, p.singleton(i));
    }
    EXPECT_GE(SimpleGreedy(p).total_influence, best_single - 1e-9) << seed;
  }
}

TEST(TopK, ToyOrder) {
  auto toy = ToyInstance();
  SelectionProblem p(toy.instance, toy.demand);
  Solution s = TopKBaseline(p);
  EXPECT_EQ(s.selected, kToyAll);
  EXPECT_EQ(s.total_influence, 17.0);
  // With room for only one zone-0 slot, the larger one (b2) is taken.
  Demand tight{{1.0, 0.0, 0.0}, 200};
  SelectionProblem q(toy.instance, tight);
  EXPECT_EQ(TopKBaseline(q).selected, (std::vector<SlotId>{2}));
}

TEST(TopK, SingleSlotAndTinyBudget) {
  Instance one({Slot{5, 1, 0, 3, 0}}, {Zone{0, {}}}, InfluenceMatrix(2, {Block(0, 2)}));
  const Demand roomy{{1.0}, 3};
  const Demand tight{{1.0}, 2};
  SelectionProblem fits(one, roomy);
  EXPECT_EQ(TopKBaseline(fits).selected, (std::vector<SlotId>{5}));
  SelectionProblem too_small(one, tight);
  Solution s = TopKBaseline(too_small);
  EXPECT_TRUE(s.selected.empty());
  EXPECT_FALSE(s.feasible);
}

TEST(Random, DeterministicAndWithinBudget) {
  auto toy = ToyInstance();
  SelectionProblem p(toy.instance, toy.demand);
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Solution a = RandomBaseline(p, seed);
    Solution b = RandomBaseline(p, seed);
    ASSERT_EQ(a.selected, b.selected);
    ASSERT_LE(a.total_cost, 1000);
    total += a.total_influence;
  }
  EXPECT_LE(total / 1000.0, 17.0);
}

TEST(Exact, Toy) {
  auto toy = ToyInstance();
  SelectionProblem p(toy.instance, toy.demand);
  Solution s = ExactBruteForce(p);
  EXPECT_EQ(s.total_influence, 17.0);
  EXPECT_EQ(s.selected, kToyAll);
}

TEST(Exact, UnreachableDemand) {
  auto toy = ToyInstance();
  Demand d{{100.0, 0.0, 0.0}, 1000};
  SelectionProblem p(toy.instance, d);
  Solution s = ExactBruteForce(p);
  EXPECT_FALSE(s.feasible);
  EXPECT_TRUE(s.selected.empty());
}

TEST(Exact, TooLarge) {
  GenParams params;
  params.n_slots = kExactSlotLimit + 1;
  params.n_users = 50;
  params.coverage_density = 3;
  auto g = Generate(params);
  SelectionProblem p(g.instance, g.demand);
  try {
    ExactBruteForce(p);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(Exact, TiesGoToSmallestIds) {
  // Two identical disjoint slots and room for one.
  Instance inst({Slot{8, 1, 0, 1, 0}, Slot{3, 2, 0, 1, 0}}, {Zone{0, {}}},
                InfluenceMatrix(2, {Block(0, 1), Block(1, 1)}));
  const Demand d{{0.0}, 1};
  SelectionProblem p(inst, d);
  EXPECT_EQ(ExactBruteForce(p).selected, (std::vector<SlotId>{3}));
}

TEST(Exact, MatchesOracle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto g = testing::SmallRandomInstance(seed, 10);
    SelectionProblem p(g.instance, g.demand);
    Solution s = ExactBruteForce(p);
    auto opt = testing::OracleBest(g.instance, g.demand);
    ASSERT_EQ(s.feasible, opt.has_value()) << seed;
    if (opt) EXPECT_NEAR(s.total_influence, opt->influence, 1e-9) << seed;
  }
}

class BranchAndBoundTest : public ::testing::TestWithParam<Estimator> {
 protected:
  SolverConfig Config() const {
    SolverConfig c;
    c.estimator = GetParam();
    return c;
  }
};

TEST_P(BranchAndBoundTest, Toy) {
  auto toy = ToyInstance();
  SelectionProblem p(toy.instance, toy.demand);
  auto r = BranchAndBound(p, Config());
  EXPECT_EQ(r.solution.selected, kToyAll);
  EXPECT_EQ(r.solution.total_influence, 17.0);
  EXPECT_EQ(r.solution.total_cost, 1000);
  EXPECT_TRUE(r.solution.feasible);
  EXPECT_EQ(r.root_upper, 17.0);
}

TEST_P(BranchAndBoundTest, SingleSlot) {
  Instance one({Slot{5, 1, 0, 3, 0}}, {Zone{0, {}}}, InfluenceMatrix(2, {Block(0, 2)}));
  const Demand roomy{{0.0}, 3};
  const Demand tight{{0.0}, 2};
  SelectionProblem fits(one, roomy);
  EXPECT_EQ(BranchAndBound(fits, Config()).solution.selected, (std::vector<SlotId>{5}));
  SelectionProblem too_small(one, tight);
  EXPECT_TRUE(BranchAndBound(too_small, Config()).solution.selected.empty());
}

TEST_P(BranchAndBoundTest, NodeBudgetStopsEarly) {
  // theta = 1 forces exploration past the root on most instances.
  SolverConfig c = Config();
  c.theta = 1.0;
  c.node_budget = 3;
  bool saw_flag = false;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = testing::SmallRandomInstance(seed);
    SelectionProblem p(g.instance, g.demand);
    auto r = BranchAndBound(p, c);
    EXPECT_LE(r.nodes_expanded, 3u);
    EXPECT_LE(r.solution.total_cost, p.budget());
    saw_flag |= r.node_budget_exhausted;
  }
  EXPECT_TRUE(saw_flag);
}

TEST_P(BranchAndBoundTest, ThetaOneIsOptimal) {
  SolverConfig c = Config();
  c.theta = 1.0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto g = testing::SmallRandomInstance(seed, 10);
    SelectionProblem p(g.instance, g.demand);
    auto r = BranchAndBound(p, c);
    auto opt = testing::OracleBest(g.instance, g.demand);
    ASSERT_EQ(r.solution.feasible, opt.has_value()) << seed;
    if (opt) EXPECT_NEAR(r.solution.total_influence, opt->influence, 1e-9) << seed;
  }
}

TEST_P(BranchAndBoundTest, RejectsBadConfig) {
  auto toy = ToyInstance();
  SelectionProblem p(toy.instance, toy.demand);
  SolverConfig c = Config();
  c.theta = 1.5;
  EXPECT_THROW(BranchAndBound(p, c), Error);
}

INSTANTIATE_TEST_SUITE_P(BothEstimators, BranchAndBoundTest,
                         ::testing::Values(Estimator::kFast, Estimator::kThreshold),
                         [](const auto& info) {
                           return std::string(ToString(info.param));
                         });

TEST(RunAlgorithm, EstimatorFollowsAlgorithm) {
  auto toy = ToyInstance();
  SelectionProblem p(toy.instance, toy.demand);
  SolverConfig c;
  c.estimator = Estimator::kThreshold;
  EXPECT_EQ(RunAlgorithm(Algorithm::kBfbs, p, c).config.estimator, Estimator::kFast);
  c.estimator = Estimator::kFast;
  EXPECT_EQ(RunAlgorithm(Algorithm::kBbs, p, c).config.estimator, Estimator::kThreshold);
  for (Algorithm a : AllAlgorithms()) {
    RunRecord r = RunAlgorithm(a, p, SolverConfig{});
    EXPECT_EQ(r.algorithm, a);
    EXPECT_EQ(r.solution.total_influence, 17.0) << ToString(a);
    EXPECT_GE(r.wall_time_ms, 0.0);
  }
}

}  // namespace
}  // namespace zonesel
