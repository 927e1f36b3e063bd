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

#include "zonesel/influence.hpp"

#include <string>

namespace zonesel {
namespace {

void ThrowAlreadySelected(const Instance& instance, std::size_t slot_index) {
  throw Error(ErrorCode::kAlreadySelected,
              "slot " + std::to_string(instance.slot(slot_index).slot_id) +
                  " is already selected");
}

}  // namespace

CoverageState::CoverageState(const Instance& instance)
    : instance_(&instance),
      residual_(instance.num_users(), 1.0),
      member_flags_(instance.num_slots(), false) {}

double CoverageState::MarginalGain(std::size_t slot_index) const {
  if (member_flags_[slot_index]) ThrowAlreadySelected(*instance_, slot_index);
  double gain = 0.0;
  for (const Exposure& e : instance_->row(slot_index)) {
    gain += residual_[e.user] * e.prob;
  }
  return gain;
}

double CoverageState::Commit(std::size_t slot_index) {
  if (member_flags_[slot_index]) ThrowAlreadySelected(*instance_, slot_index);
  double gain = 0.0;
  for (const Exposure& e : instance_->row(slot_index)) {
    double& r = residual_[e.user];
    gain += r * e.prob;
    r *= 1.0 - e.prob;
  }
  member_flags_[slot_index] = true;
  members_.push_back(slot_index);
  influence_ += gain;
  cost_ += instance_->slot(slot_index).cost;
  return gain;
}

double CoverageState::RecomputeInfluence() const {
  double total = 0.0;
  for (double r : residual_) total += 1.0 - r;
  return total;
}

double InfluenceOfIndices(const Instance& instance,
                          std::span<const std::size_t> selected) {
  std::vector<double> residual(instance.num_users(), 1.0);
  std::vector<bool> seen(instance.num_slots(), false);
  for (std::size_t i : selected) {
    if (seen[i]) continue;
    seen[i] = true;
    for (const Exposure& e : instance.row(i)) residual[e.user] *= 1.0 - e.prob;
  }
  double total = 0.0;
  for (double r : residual) total += 1.0 - r;
  return total;
}

double InfluenceOf(const Instance& instance, std::span<const SlotId> selected) {
  return InfluenceOfIndices(instance, instance.IndicesOf(selected));
}

std::vector<double> ZonalInfluences(const Instance& instance,
                                    std::span<const std::size_t> selected) {
  std::vector<double> out(instance.num_zones(), 0.0);
  std::vector<std::vector<std::size_t>> by_zone(instance.num_zones());
  for (std::size_t i : selected) {
    int z = instance.slot(i).zone_id;
    if (z >= 0 && static_cast<std::size_t>(z) < by_zone.size()) {
      by_zone[z].push_back(i);
    }
  }
  for (std::size_t j = 0; j < by_zone.size(); ++j) {
    if (!by_zone[j].empty()) out[j] = InfluenceOfIndices(instance, by_zone[j]);
  }
  return out;
}

double ZonalInfluenceOf(const Instance& instance,
                        std::span<const SlotId> selected, int zone_id) {
  if (zone_id < 0 || static_cast<std::size_t>(zone_id) >= instance.num_zones()) {
    throw Error(ErrorCode::kUnknownZone,
                "unknown zone " + std::to_string(zone_id));
  }
  std::vector<std::size_t> in_zone;
  for (std::size_t i : instance.IndicesOf(selected)) {
    if (instance.slot(i).zone_id == zone_id) in_zone.push_back(i);
  }
  return InfluenceOfIndices(instance, in_zone);
}

std::vector<double> SingletonInfluences(const Instance& instance) {
  std::vector<double> out(instance.num_slots(), 0.0);
  for (std::size_t i = 0; i < instance.num_slots(); ++i) {
    // Rows hold distinct users, so I({s}) is the row sum.
    double total = 0.0;
    for (const Exposure& e : instance.row(i)) total += e.prob;
    out[i] = total;
  }
  return out;
}

}  // namespace zonesel
