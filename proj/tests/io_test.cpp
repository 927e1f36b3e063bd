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

#include <filesystem>
#include <functional>

#include "json.hpp"
#include "oracle.hpp"
#include "zonesel/datagen.hpp"
#include "zonesel/io.hpp"
#include "zonesel/solvers.hpp"

namespace zonesel {
namespace {

using nlohmann::json;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::kInvalidArgument;
}

TEST(InstanceJson, RoundTripIsLossless) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = testing::SmallRandomInstance(seed, 30);
    std::string text = InstanceToJson(g.instance);
    Instance back = InstanceFromJson(text);
    EXPECT_EQ(back, g.instance) << seed;
    EXPECT_EQ(InstanceToJson(back), text) << seed;
  }
  auto toy = ToyInstance();
  EXPECT_EQ(InstanceFromJson(InstanceToJson(toy.instance)), toy.instance);
}

TEST(InstanceJson, Shape) {
  json doc = json::parse(InstanceToJson(ToyInstance().instance));
  EXPECT_EQ(doc["n_users"], 17);
  EXPECT_EQ(doc["slots"].size(), 4u);
  EXPECT_EQ(doc["zones"].size(), 3u);
  EXPECT_EQ(doc["zones"][0]["bbox"].size(), 4u);
  EXPECT_EQ(doc["matrix"].size(), 17u);
  EXPECT_EQ(doc["matrix"][0].size(), 3u);
}

TEST(InstanceJson, Errors) {
  EXPECT_EQ(CodeOf([] { InstanceFromJson("{not json"); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { InstanceFromJson(R"({"zones": []})"); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] {
              InstanceFromJson(R"({"zones": [{"zone_id": 0}], "n_users": 1,
                 "slots": [{"slot_id": 1, "cost": 1, "zone_id": 0}],
                 "matrix": [[2, 0, 0.5]]})");
            }),
            ErrorCode::kUnknownSlotId);
  EXPECT_EQ(CodeOf([] {
              InstanceFromJson(R"({"zones": [{"zone_id": 0}], "n_users": 1,
                 "slots": [{"slot_id": 1, "cost": 1, "zone_id": 0}],
                 "matrix": [[1, 0]]})");
            }),
            ErrorCode::kParseError);
}

TEST(DemandJson, RoundTrip) {
  Demand d{{5.0, 7.25, 0.0}, 1000};
  Demand back = DemandFromJson(DemandToJson(d));
  EXPECT_EQ(back.sigma, d.sigma);
  EXPECT_EQ(back.budget, d.budget);
  EXPECT_EQ(CodeOf([] { DemandFromJson(R"({"sigma": [1]})"); }), ErrorCode::kParseError);
}

TEST(RunRecordJson, Fields) {
  auto toy = ToyInstance();
  SelectionProblem p(toy.instance, toy.demand);
  SolverConfig c;
  c.node_budget = 50;
  json doc = json::parse(RunRecordToJson(RunAlgorithm(Algorithm::kBbs, p, c)));
  EXPECT_EQ(doc["algorithm"], "bbs");
  EXPECT_EQ(doc["influence"], 17.0);
  EXPECT_EQ(doc["cost"], 1000);
  EXPECT_EQ(doc["feasible"], true);
  EXPECT_EQ(doc["selected"], json::array({1, 2, 3, 4}));
  EXPECT_EQ(doc["zonal_influence"], json::array({5.0, 7.0, 5.0}));
  EXPECT_EQ(doc["config"]["estimator"], "threshold");
  EXPECT_EQ(doc["config"]["node_budget"], 50);
  EXPECT_TRUE(doc.contains("wall_time_ms"));
  EXPECT_TRUE(doc.contains("nodes_expanded"));

  json greedy = json::parse(RunRecordToJson(RunAlgorithm(Algorithm::kGreedy, p, SolverConfig{})));
  EXPECT_TRUE(greedy["config"]["node_budget"].is_null());
}

TEST(ConfigJson, IngestKeys) {
  IngestConfig c = IngestConfigFromJson(
      R"({"t1": 10, "t2": 110, "delta": 50, "eta": 25, "p_hit": 0.2, "seed": 4,
          "zone_grid": {"rows": 2, "cols": 3, "bounds": [0, 1, 2, 3]}})");
  EXPECT_EQ(c.t1, 10);
  EXPECT_EQ(c.t2, 110);
  EXPECT_EQ(c.delta, 50);
  EXPECT_EQ(c.eta_meters, 25.0);
  EXPECT_EQ(c.p_hit, 0.2);
  EXPECT_EQ(c.seed, 4u);
  EXPECT_EQ(c.zone_grid.rows, 2);
  EXPECT_EQ(c.zone_grid.cols, 3);
  ASSERT_TRUE(c.zone_grid.bounds.has_value());
  EXPECT_EQ(*c.zone_grid.bounds, (BoundingBox{0, 1, 2, 3}));
  EXPECT_EQ(IngestConfigFromJson("{}").eta_meters, 100.0);
  EXPECT_EQ(CodeOf([] { IngestConfigFromJson(R"({"t1": "x"})"); }), ErrorCode::kParseError);
}

TEST(ConfigJson, GenParamsRoundTrip) {
  GenParams p;
  p.n_slots = 17;
  p.coverage_density = 3.5;
  p.seed = 99;
  GenParams back = GenParamsFromJson(GenParamsToJson(p));
  EXPECT_EQ(back.n_slots, 17u);
  EXPECT_EQ(back.coverage_density, 3.5);
  EXPECT_EQ(back.seed, 99u);
  EXPECT_EQ(GenParamsToJson(back), GenParamsToJson(p));
}

TEST(Files, SaveLoadAndErrors) {
  auto path = std::filesystem::temp_directory_path() / "zonesel_io_test_toy.json";
  SaveInstance(path, ToyInstance().instance);
  EXPECT_EQ(LoadInstance(path), ToyInstance().instance);
  std::filesystem::remove(path);
  EXPECT_EQ(CodeOf([] { ReadFile("/nonexistent/zonesel.json"); }), ErrorCode::kFileNotFound);
  EXPECT_EQ(CodeOf([] { WriteFile("/nonexistent/dir/zonesel.json", "x"); }),
            ErrorCode::kIoError);
}

}  // namespace
}  // namespace zonesel
