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

// Expected-influence evaluation:
//
//   I(S) = sum_u [1 - prod_{s in S} (1 - Pr(s, u))]
//
// CoverageState caches the per-user product so a marginal-gain query costs
// O(|row(s)|) instead of a full re-evaluation.

#ifndef ZONESEL_INFLUENCE_HPP_
#define ZONESEL_INFLUENCE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "zonesel/model.hpp"

namespace zonesel {

class CoverageState {
 public:
  explicit CoverageState(const Instance& instance);

  // I(S + {slot}) - I(S). Throws Error(kAlreadySelected) for members.
  double MarginalGain(std::size_t slot_index) const;

  // Adds `slot_index` to the members and returns the realised gain.
  // Throws Error(kAlreadySelected) for members.
  double Commit(std::size_t slot_index);

  double influence() const { return influence_; }
  Cost cost() const { return cost_; }
  bool Contains(std::size_t slot_index) const {
    return member_flags_[slot_index];
  }
  // In commit order.
  const std::vector<std::size_t>& members() const { return members_; }
  std::span<const double> residuals() const { return residual_; }

  // sum_u (1 - r_u), recomputed from the residual vector.
  double RecomputeInfluence() const;

  const Instance& instance() const { return *instance_; }

 private:
  const Instance* instance_;
  std::vector<double> residual_;
  std::vector<bool> member_flags_;
  std::vector<std::size_t> members_;
  double influence_ = 0.0;
  Cost cost_ = 0;
};

// Batch evaluation. Throws Error(kUnknownSlotId).
double InfluenceOf(const Instance& instance, std::span<const SlotId> selected);

// Batch evaluation over slot positions; duplicated positions count once.
double InfluenceOfIndices(const Instance& instance,
                          std::span<const std::size_t> selected);

// Influence of the selected slots lying in `zone_id`.
// Throws Error(kUnknownSlotId) or Error(kUnknownZone).
double ZonalInfluenceOf(const Instance& instance,
                        std::span<const SlotId> selected, int zone_id);

// One entry per zone of the instance.
std::vector<double> ZonalInfluences(const Instance& instance,
                                    std::span<const std::size_t> selected);

// I({s}) for every slot, by position.
std::vector<double> SingletonInfluences(const Instance& instance);

}  // namespace zonesel

#endif  // ZONESEL_INFLUENCE_HPP_
