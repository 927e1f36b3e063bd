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

#include "zonesel/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace zonesel {
namespace {

using nlohmann::json;

json Parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string(what) + ": " + e.what());
  }
}

template <typename T>
void Get(const json& j, const char* key, T& out) {
  if (j.contains(key)) j.at(key).get_to(out);
}

}  // namespace

std::string InstanceToJson(const Instance& instance) {
  json zones = json::array();
  for (const Zone& z : instance.zones()) {
    zones.push_back({{"zone_id", z.zone_id},
                     {"bbox", {z.bbox.lat_min, z.bbox.lat_max, z.bbox.lon_min,
                               z.bbox.lon_max}}});
  }
  json slots = json::array();
  json matrix = json::array();
  for (std::size_t i = 0; i < instance.num_slots(); ++i) {
    const Slot& s = instance.slot(i);
    slots.push_back({{"slot_id", s.slot_id},
                     {"billboard_id", s.billboard_id},
                     {"time_index", s.time_index},
                     {"cost", s.cost},
                     {"zone_id", s.zone_id}});
    for (const Exposure& e : instance.row(i)) {
      matrix.push_back(json::array({s.slot_id, e.user, e.prob}));
    }
  }
  json doc;
  doc["zones"] = std::move(zones);
  doc["slots"] = std::move(slots);
  doc["n_users"] = instance.num_users();
  doc["matrix"] = std::move(matrix);
  return doc.dump();
}

Instance InstanceFromJson(const std::string& text) {
  json doc = Parse(text, "instance");
  try {
    std::vector<Zone> zones;
    for (const json& z : doc.at("zones")) {
      Zone zone;
      zone.zone_id = z.at("zone_id").get<int>();
      if (z.contains("bbox")) {
        const json& b = z.at("bbox");
        if (!b.is_array() || b.size() != 4) {
          throw Error(ErrorCode::kParseError, "zone bbox must have 4 numbers");
        }
        zone.bbox = {b[0].get<double>(), b[1].get<double>(), b[2].get<double>(),
                     b[3].get<double>()};
      }
      zones.push_back(zone);
    }
    std::vector<Slot> slots;
    for (const json& s : doc.at("slots")) {
      Slot slot;
      slot.slot_id = s.at("slot_id").get<SlotId>();
      slot.billboard_id = s.value("billboard_id", std::int64_t{0});
      slot.time_index = s.value("time_index", std::int64_t{0});
      slot.cost = s.at("cost").get<Cost>();
      slot.zone_id = s.at("zone_id").get<int>();
      slots.push_back(slot);
    }
    const auto n_users = doc.at("n_users").get<std::size_t>();

    std::unordered_map<SlotId, std::size_t> index;
    for (std::size_t i = 0; i < slots.size(); ++i) index.emplace(slots[i].slot_id, i);
    std::vector<std::vector<Exposure>> rows(slots.size());
    for (const json& t : doc.at("matrix")) {
      if (!t.is_array() || t.size() != 3) {
        throw Error(ErrorCode::kParseError, "matrix entries must be [slot_id, user_id, prob]");
      }
      auto id = t[0].get<SlotId>();
      auto it = index.find(id);
      if (it == index.end()) {
        throw Error(ErrorCode::kUnknownSlotId,
                    "matrix references unknown slot id " + std::to_string(id));
      }
      rows[it->second].push_back({t[1].get<UserId>(), t[2].get<double>()});
    }
    return Instance(std::move(slots), std::move(zones),
                    InfluenceMatrix(n_users, std::move(rows)));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("instance: ") + e.what());
  }
}

std::string DemandToJson(const Demand& demand) {
  return json{{"sigma", demand.sigma}, {"budget", demand.budget}}.dump();
}

Demand DemandFromJson(const std::string& text) {
  json doc = Parse(text, "demand");
  try {
    Demand d;
    doc.at("sigma").get_to(d.sigma);
    doc.at("budget").get_to(d.budget);
    return d;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("demand: ") + e.what());
  }
}

std::string RunRecordToJson(const RunRecord& record) {
  json config = {{"theta", record.config.theta},
                 {"epsilon", record.config.epsilon},
                 {"estimator", ToString(record.config.estimator)},
                 {"seed", record.config.seed}};
  config["node_budget"] = record.config.node_budget
                              ? json(*record.config.node_budget)
                              : json(nullptr);
  json doc = {{"algorithm", ToString(record.algorithm)},
              {"config", std::move(config)},
              {"selected", record.solution.selected},
              {"cost", record.solution.total_cost},
              {"influence", record.solution.total_influence},
              {"zonal_influence", record.solution.zonal_influence},
              {"feasible", record.solution.feasible},
              {"nodes_expanded", record.nodes_expanded},
              {"wall_time_ms", record.wall_time_ms},
              {"node_budget_exhausted", record.node_budget_exhausted}};
  return doc.dump();
}

IngestConfig IngestConfigFromJson(const std::string& text) {
  json doc = Parse(text, "ingest config");
  IngestConfig c;
  try {
    Get(doc, "t1", c.t1);
    Get(doc, "t2", c.t2);
    Get(doc, "delta", c.delta);
    Get(doc, "eta", c.eta_meters);
    Get(doc, "p_hit", c.p_hit);
    Get(doc, "cost_delta_min", c.cost_delta_min);
    Get(doc, "cost_delta_max", c.cost_delta_max);
    Get(doc, "seed", c.seed);
    if (doc.contains("zone_grid")) {
      const json& g = doc.at("zone_grid");
      Get(g, "rows", c.zone_grid.rows);
      Get(g, "cols", c.zone_grid.cols);
      if (g.contains("bounds")) {
        const json& b = g.at("bounds");
        c.zone_grid.bounds = BoundingBox{b.at(0).get<double>(), b.at(1).get<double>(),
                                         b.at(2).get<double>(), b.at(3).get<double>()};
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("ingest config: ") + e.what());
  }
  return c;
}

GenParams GenParamsFromJson(const std::string& text) {
  json doc = Parse(text, "generator params");
  GenParams p;
  try {
    Get(doc, "n_slots", p.n_slots);
    Get(doc, "n_users", p.n_users);
    Get(doc, "n_zones", p.n_zones);
    Get(doc, "coverage_density", p.coverage_density);
    Get(doc, "prob_min", p.prob_min);
    Get(doc, "prob_max", p.prob_max);
    Get(doc, "cost_delta_min", p.cost_delta_min);
    Get(doc, "cost_delta_max", p.cost_delta_max);
    Get(doc, "demand_fraction", p.demand_fraction);
    Get(doc, "budget_fraction", p.budget_fraction);
    Get(doc, "seed", p.seed);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("generator params: ") + e.what());
  }
  return p;
}

std::string GenParamsToJson(const GenParams& p) {
  return json{{"n_slots", p.n_slots},
              {"n_users", p.n_users},
              {"n_zones", p.n_zones},
              {"coverage_density", p.coverage_density},
              {"prob_min", p.prob_min},
              {"prob_max", p.prob_max},
              {"cost_delta_min", p.cost_delta_min},
              {"cost_delta_max", p.cost_delta_max},
              {"demand_fraction", p.demand_fraction},
              {"budget_fraction", p.budget_fraction},
              {"seed", p.seed}}
      .dump();
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kFileNotFound, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << contents;
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path.string());
}

Instance LoadInstance(const std::filesystem::path& path) {
  return InstanceFromJson(ReadFile(path));
}

void SaveInstance(const std::filesystem::path& path, const Instance& instance) {
  WriteFile(path, InstanceToJson(instance) + "\n");
}

}  // namespace zonesel
