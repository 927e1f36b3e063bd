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

// JSON documents exchanged with the outside world.
//
// Instance:
//   {"zones":    [{"zone_id": 0, "bbox": [lat_min, lat_max, lon_min, lon_max]}],
//    "slots":    [{"slot_id": 1, "billboard_id": 1, "time_index": 0,
//                  "cost": 100, "zone_id": 0}],
//    "n_users":  17,
//    "matrix":   [[slot_id, user_id, prob], ...]}
//
// Matrix triples are written in slot order, then user order. Probabilities
// are printed with round-trip precision, so a save/load cycle is lossless.
//
// Demand: {"sigma": [5, 7, 0], "budget": 1000}
//
// Run record: {"algorithm", "config", "selected", "cost", "influence",
//              "zonal_influence", "feasible", "nodes_expanded",
//              "wall_time_ms", "node_budget_exhausted"}

#ifndef ZONESEL_IO_HPP_
#define ZONESEL_IO_HPP_

#include <filesystem>
#include <string>

#include "zonesel/datagen.hpp"
#include "zonesel/ingest.hpp"
#include "zonesel/model.hpp"
#include "zonesel/solvers.hpp"

namespace zonesel {

// Canonical compact form; identical instances give identical bytes.
std::string InstanceToJson(const Instance& instance);
// Throws Error(kParseError) or Error(kUnknownSlotId).
Instance InstanceFromJson(const std::string& text);

std::string DemandToJson(const Demand& demand);
Demand DemandFromJson(const std::string& text);

std::string RunRecordToJson(const RunRecord& record);

// Keys mirror the struct fields; missing keys keep their defaults.
// zone_grid is {"rows": r, "cols": c[, "bounds": [lat_min, lat_max,
// lon_min, lon_max]]}; "eta" is in meters.
IngestConfig IngestConfigFromJson(const std::string& text);
GenParams GenParamsFromJson(const std::string& text);
std::string GenParamsToJson(const GenParams& params);

// Throws Error(kFileNotFound) / Error(kIoError).
std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, const std::string& contents);

Instance LoadInstance(const std::filesystem::path& path);
void SaveInstance(const std::filesystem::path& path, const Instance& instance);

}  // namespace zonesel

#endif  // ZONESEL_IO_HPP_
