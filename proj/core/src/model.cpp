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

#include "zonesel/model.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "zonesel/influence.hpp"

namespace zonesel {

const char* ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownSlotId:
      return "UnknownSlotId";
    case ErrorCode::kUnknownZone:
      return "UnknownZone";
    case ErrorCode::kAlreadySelected:
      return "AlreadySelected";
    case ErrorCode::kTooLarge:
      return "TooLarge";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kFileNotFound:
      return "FileNotFound";
    case ErrorCode::kHeaderMismatch:
      return "HeaderMismatch";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kOutOfGrid:
      return "OutOfGrid";
    case ErrorCode::kIoError:
      return "IoError";
  }
  return "Unknown";
}

const char* ToString(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kCostNotPositive:
      return "CostNotPositive";
    case ViolationKind::kZoneOutOfRange:
      return "ZoneOutOfRange";
    case ViolationKind::kDuplicateSlotId:
      return "DuplicateSlotId";
    case ViolationKind::kDuplicateBillboardWindow:
      return "DuplicateBillboardWindow";
    case ViolationKind::kDuplicateZoneId:
      return "DuplicateZoneId";
    case ViolationKind::kZoneIdMismatch:
      return "ZoneIdMismatch";
    case ViolationKind::kOverlappingZones:
      return "OverlappingZones";
    case ViolationKind::kRowCountMismatch:
      return "RowCountMismatch";
    case ViolationKind::kUserOutOfRange:
      return "UserOutOfRange";
    case ViolationKind::kProbOutOfRange:
      return "ProbOutOfRange";
    case ViolationKind::kDuplicateEntry:
      return "DuplicateEntry";
  }
  return "Unknown";
}

InfluenceMatrix::InfluenceMatrix(std::size_t n_users,
                                 std::vector<std::vector<Exposure>> rows)
    : n_users_(n_users), rows_(std::move(rows)) {
  for (auto& row : rows_) {
    std::stable_sort(row.begin(), row.end(),
                     [](const Exposure& a, const Exposure& b) {
                       return a.user < b.user;
                     });
  }
}

std::size_t InfluenceMatrix::nnz() const {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.size();
  return total;
}

Instance::Instance(std::vector<Slot> slots, std::vector<Zone> zones,
                   InfluenceMatrix matrix)
    : slots_(std::move(slots)), zones_(std::move(zones)) {
  auto rows = matrix.rows();
  if (rows.size() < slots_.size()) rows.resize(slots_.size());
  matrix_ = InfluenceMatrix(matrix.n_users(), std::move(rows));
  index_.reserve(slots_.size());
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    // First occurrence wins; duplicates are a validation finding.
    index_.emplace(slots_[i].slot_id, i);
  }
}

std::optional<std::size_t> Instance::FindIndex(SlotId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Instance::IndexOf(SlotId id) const {
  auto found = FindIndex(id);
  if (!found) {
    throw Error(ErrorCode::kUnknownSlotId,
                "unknown slot id " + std::to_string(id));
  }
  return *found;
}

std::vector<std::size_t> Instance::IndicesOf(
    std::span<const SlotId> ids) const {
  std::vector<std::size_t> out;
  out.reserve(ids.size());
  for (SlotId id : ids) out.push_back(IndexOf(id));
  return out;
}

Cost Instance::CostOf(std::span<const std::size_t> indices) const {
  Cost total = 0;
  for (std::size_t i : indices) total += slots_[i].cost;
  return total;
}

std::vector<Violation> ValidateInstance(const Instance& instance) {
  std::vector<Violation> out;
  const auto& slots = instance.slots();
  const auto& zones = instance.zones();
  const std::size_t n_zones = zones.size();

  for (std::size_t j = 0; j < n_zones; ++j) {
    if (zones[j].zone_id != static_cast<int>(j)) {
      out.push_back({ViolationKind::kZoneIdMismatch, std::nullopt,
                     "zone at position " + std::to_string(j) + " has id " +
                         std::to_string(zones[j].zone_id)});
    }
  }
  std::set<int> zone_ids;
  for (const Zone& z : zones) {
    if (!zone_ids.insert(z.zone_id).second) {
      out.push_back({ViolationKind::kDuplicateZoneId, std::nullopt,
                     "zone id " + std::to_string(z.zone_id)});
    }
  }
  // Boxes are closed-open; touching edges do not overlap.
  for (std::size_t a = 0; a < n_zones; ++a) {
    for (std::size_t b = a + 1; b < n_zones; ++b) {
      const BoundingBox& p = zones[a].bbox;
      const BoundingBox& q = zones[b].bbox;
      bool lat = p.lat_min < q.lat_max && q.lat_min < p.lat_max;
      bool lon = p.lon_min < q.lon_max && q.lon_min < p.lon_max;
      if (lat && lon) {
        out.push_back({ViolationKind::kOverlappingZones, std::nullopt,
                       "zones " + std::to_string(zones[a].zone_id) + " and " +
                           std::to_string(zones[b].zone_id)});
      }
    }
  }

  std::set<SlotId> ids;
  std::set<std::pair<std::int64_t, std::int64_t>> windows;
  for (const Slot& s : slots) {
    if (!ids.insert(s.slot_id).second) {
      out.push_back({ViolationKind::kDuplicateSlotId, s.slot_id, ""});
    }
    if (!windows.insert({s.billboard_id, s.time_index}).second) {
      out.push_back({ViolationKind::kDuplicateBillboardWindow, s.slot_id,
                     "billboard " + std::to_string(s.billboard_id) +
                         " window " + std::to_string(s.time_index)});
    }
    if (s.cost < 1) {
      out.push_back({ViolationKind::kCostNotPositive, s.slot_id,
                     "cost " + std::to_string(s.cost)});
    }
    if (s.zone_id < 0 || static_cast<std::size_t>(s.zone_id) >= n_zones) {
      out.push_back({ViolationKind::kZoneOutOfRange, s.slot_id,
                     "zone " + std::to_string(s.zone_id)});
    }
  }

  const InfluenceMatrix& m = instance.matrix();
  if (m.n_rows() != slots.size()) {
    out.push_back({ViolationKind::kRowCountMismatch, std::nullopt,
                   std::to_string(m.n_rows()) + " rows for " +
                       std::to_string(slots.size()) + " slots"});
  }
  const std::size_t rows = std::min(m.n_rows(), slots.size());
  for (std::size_t i = 0; i < rows; ++i) {
    auto row = m.row(i);
    for (std::size_t k = 0; k < row.size(); ++k) {
      const Exposure& e = row[k];
      if (e.user >= m.n_users()) {
        out.push_back({ViolationKind::kUserOutOfRange, slots[i].slot_id,
                       "user " + std::to_string(e.user)});
      }
      if (!(e.prob > 0.0 && e.prob <= 1.0)) {
        out.push_back({ViolationKind::kProbOutOfRange, slots[i].slot_id,
                       "user " + std::to_string(e.user) + " prob " +
                           std::to_string(e.prob)});
      }
      if (k > 0 && row[k - 1].user == e.user) {
        out.push_back({ViolationKind::kDuplicateEntry, slots[i].slot_id,
                       "user " + std::to_string(e.user)});
      }
    }
  }
  return out;
}

std::vector<std::string> ValidateDemand(const Instance& instance,
                                        const Demand& demand) {
  std::vector<std::string> out;
  if (demand.sigma.size() != instance.num_zones()) {
    out.push_back("sigma has " + std::to_string(demand.sigma.size()) +
                  " entries for " + std::to_string(instance.num_zones()) +
                  " zones");
  }
  for (std::size_t j = 0; j < demand.sigma.size(); ++j) {
    if (!(demand.sigma[j] >= 0.0)) {
      out.push_back("sigma[" + std::to_string(j) + "] is negative");
    }
  }
  if (demand.budget < 0) out.push_back("budget is negative");
  return out;
}

bool MeetsDemand(std::span<const double> zonal_influence,
                 const Demand& demand) {
  for (std::size_t j = 0; j < demand.sigma.size(); ++j) {
    double have = j < zonal_influence.size() ? zonal_influence[j] : 0.0;
    if (have < demand.sigma[j] - kDemandTolerance) return false;
  }
  return true;
}

Solution EvaluateIndices(const Instance& instance, const Demand& demand,
                         std::span<const std::size_t> selected) {
  std::vector<std::size_t> unique(selected.begin(), selected.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  Solution sol;
  sol.selected.reserve(unique.size());
  for (std::size_t i : unique) sol.selected.push_back(instance.slot(i).slot_id);
  std::sort(sol.selected.begin(), sol.selected.end());
  sol.total_cost = instance.CostOf(unique);
  sol.total_influence = InfluenceOfIndices(instance, unique);
  sol.zonal_influence = ZonalInfluences(instance, unique);
  sol.feasible =
      sol.total_cost <= demand.budget && MeetsDemand(sol.zonal_influence, demand);
  return sol;
}

Solution Evaluate(const Instance& instance, const Demand& demand,
                  std::span<const SlotId> selected) {
  return EvaluateIndices(instance, demand, instance.IndicesOf(selected));
}

}  // namespace zonesel
