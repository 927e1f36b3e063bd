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

// Parameter sweeps over one instance source.
//
// Spec file:
//   {"source": {"generator": {...GenParams keys...}}
//            | {"file": "inst.json", "demand": {"sigma": [...], "budget": N}}
//            | {"ingest": {"billboards": "b.csv", "checkins": "c.csv",
//                          "config": {...}, "demand_fraction": 0.1,
//                          "budget_fraction": 0.1}},
//    "algorithms": ["greedy", "bbs", ...],
//    "axis": "budget", "values": [5000, 10000],
//    "repetitions": 5, "seed": 0, "theta": 0.7, "epsilon": 0.1}
//
// Relative paths resolve against the spec file's directory. Generator
// sources draw a fresh instance per repetition (seed + rep); the other
// sources reuse one instance and vary only the solver seed.
//
// Axis semantics:
//   budget        demand budget
//   theta/epsilon solver config
//   eta           ingest distance threshold in meters (ingest only)
//   zones         number of demanded zones; sigma of later zones is zeroed
//   slots         generator slot count, else keep the first n slots
//   trajectories  generator user count, else keep users with id < n

#ifndef ZONESEL_EXPERIMENT_HPP_
#define ZONESEL_EXPERIMENT_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "zonesel/datagen.hpp"
#include "zonesel/ingest.hpp"
#include "zonesel/model.hpp"
#include "zonesel/solvers.hpp"

namespace zonesel {

enum class SweepAxis { kBudget, kTheta, kEpsilon, kEta, kZones, kSlots, kTrajectories };

const char* ToString(SweepAxis axis);
std::optional<SweepAxis> ParseSweepAxis(std::string_view name);

struct IngestSource {
  std::filesystem::path billboards;
  std::filesystem::path checkins;
  IngestConfig config;
  double demand_fraction = 0.1;
  double budget_fraction = 0.1;
};

struct FileSource {
  std::filesystem::path instance;
  Demand demand;
};

struct ExperimentSpec {
  std::optional<GenParams> generator;
  std::optional<FileSource> file;
  std::optional<IngestSource> ingest;
  std::vector<Algorithm> algorithms;
  SweepAxis axis = SweepAxis::kBudget;
  std::vector<double> values;
  std::size_t repetitions = 5;
  std::uint64_t seed = 0;
  double theta = 0.7;
  double epsilon = 0.1;
  std::optional<std::size_t> node_budget;
};

// Throws Error(kParseError) for malformed JSON or unknown names.
ExperimentSpec ParseExperimentSpec(const std::string& text,
                                   const std::filesystem::path& base_dir = {});

// Empty when the experiment spec is runnable as far as can be told without loading data.
std::vector<std::string> ValidateExperimentSpec(const ExperimentSpec& spec);

// First n slots in instance order; matrix rows follow.
Instance TruncateSlots(const Instance& instance, std::size_t n);
// Drops exposures of users with id >= n; n_users becomes n.
Instance TruncateUsers(const Instance& instance, std::size_t n);

struct ExperimentRow {
  double axis_value = 0.0;
  std::size_t rep = 0;
  RunRecord record;
};

// Runs every (value, rep, algorithm) combination in that order.
// Throws Error(kInvalidArgument) for an invalid spec or when exact meets an
// instance above kExactSlotLimit slots.
std::vector<ExperimentRow> RunExperiment(const ExperimentSpec& spec);

// axis_value,algorithm,rep,influence,cost,feasible,wall_time_ms,nodes_expanded
void WriteResultsCsv(std::ostream& out, const std::vector<ExperimentRow>& rows);
// Per (axis_value, algorithm) means in first-appearance order.
void WriteSummaryCsv(std::ostream& out, const std::vector<ExperimentRow>& rows);
// One JSON object per line: {"axis_value", "rep", "run": <run record>}.
void WriteRunsJsonl(std::ostream& out, const std::vector<ExperimentRow>& rows);

}  // namespace zonesel

#endif  // ZONESEL_EXPERIMENT_HPP_
