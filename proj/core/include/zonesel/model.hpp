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

// Domain types for zonal billboard slot selection: slots, zones, the sparse
// slot-to-user influence matrix, advertiser demands and evaluated solutions.

#ifndef ZONESEL_MODEL_HPP_
#define ZONESEL_MODEL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace zonesel {

using SlotId = std::int64_t;
using UserId = std::uint32_t;
using Cost = std::int64_t;

// Absolute slack used when comparing a zone's influence against its demand.
inline constexpr double kDemandTolerance = 1e-9;

enum class ErrorCode {
  kUnknownSlotId,
  kUnknownZone,
  kAlreadySelected,
  kTooLarge,
  kInvalidArgument,
  kFileNotFound,
  kHeaderMismatch,
  kParseError,
  kOutOfGrid,
  kIoError,
};

const char* ToString(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct Slot {
  SlotId slot_id = 0;
  std::int64_t billboard_id = 0;
  // Window start offset in units of the slot duration.
  std::int64_t time_index = 0;
  Cost cost = 1;
  int zone_id = 0;

  friend bool operator==(const Slot&, const Slot&) = default;
};

struct BoundingBox {
  double lat_min = 0.0;
  double lat_max = 0.0;
  double lon_min = 0.0;
  double lon_max = 0.0;

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

struct Zone {
  int zone_id = 0;
  BoundingBox bbox;

  friend bool operator==(const Zone&, const Zone&) = default;
};

// One nonzero Pr(slot, user).
struct Exposure {
  UserId user = 0;
  double prob = 0.0;

  friend bool operator==(const Exposure&, const Exposure&) = default;
};

// Row-per-slot sparse matrix. Rows are indexed by slot position in the
// owning Instance, not by SlotId, and are kept sorted by user.
class InfluenceMatrix {
 public:
  InfluenceMatrix() = default;
  InfluenceMatrix(std::size_t n_users, std::vector<std::vector<Exposure>> rows);

  std::size_t n_users() const { return n_users_; }
  std::size_t n_rows() const { return rows_.size(); }
  std::span<const Exposure> row(std::size_t slot_index) const {
    return rows_[slot_index];
  }
  const std::vector<std::vector<Exposure>>& rows() const { return rows_; }
  std::size_t nnz() const;

  friend bool operator==(const InfluenceMatrix&,
                         const InfluenceMatrix&) = default;

 private:
  std::size_t n_users_ = 0;
  std::vector<std::vector<Exposure>> rows_;
};

// Immutable after construction; safe to share between concurrent solves.
class Instance {
 public:
  Instance() = default;
  // `matrix` rows are aligned with `slots`. A missing row count is padded
  // with empty rows; an excess is reported by ValidateInstance.
  Instance(std::vector<Slot> slots, std::vector<Zone> zones,
           InfluenceMatrix matrix);

  const std::vector<Slot>& slots() const { return slots_; }
  const std::vector<Zone>& zones() const { return zones_; }
  const InfluenceMatrix& matrix() const { return matrix_; }

  std::size_t num_slots() const { return slots_.size(); }
  std::size_t num_zones() const { return zones_.size(); }
  std::size_t num_users() const { return matrix_.n_users(); }

  const Slot& slot(std::size_t index) const { return slots_[index]; }
  std::span<const Exposure> row(std::size_t index) const {
    return matrix_.row(index);
  }

  // Throws Error(kUnknownSlotId).
  std::size_t IndexOf(SlotId id) const;
  std::optional<std::size_t> FindIndex(SlotId id) const;
  std::vector<std::size_t> IndicesOf(std::span<const SlotId> ids) const;

  Cost CostOf(std::span<const std::size_t> indices) const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.slots_ == b.slots_ && a.zones_ == b.zones_ &&
           a.matrix_ == b.matrix_;
  }

 private:
  std::vector<Slot> slots_;
  std::vector<Zone> zones_;
  InfluenceMatrix matrix_;
  std::unordered_map<SlotId, std::size_t> index_;
};

struct Demand {
  // Per-zone minimum influence; zero means the zone is not demanded.
  std::vector<double> sigma;
  Cost budget = 0;

  bool Demands(std::size_t zone) const {
    return zone < sigma.size() && sigma[zone] > 0.0;
  }
};

struct Solution {
  // Sorted ascending.
  std::vector<SlotId> selected;
  Cost total_cost = 0;
  double total_influence = 0.0;
  std::vector<double> zonal_influence;
  bool feasible = false;
};

enum class ViolationKind {
  kCostNotPositive,
  kZoneOutOfRange,
  kDuplicateSlotId,
  kDuplicateBillboardWindow,
  kDuplicateZoneId,
  kZoneIdMismatch,
  kOverlappingZones,
  kRowCountMismatch,
  kUserOutOfRange,
  kProbOutOfRange,
  kDuplicateEntry,
};

const char* ToString(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::optional<SlotId> slot_id;
  std::string detail;
};

// Checks every type invariant. Violations are data; this never throws.
std::vector<Violation> ValidateInstance(const Instance& instance);

// Demand shape problems (wrong sigma length, negative entries or budget).
std::vector<std::string> ValidateDemand(const Instance& instance,
                                        const Demand& demand);

bool MeetsDemand(std::span<const double> zonal_influence,
                 const Demand& demand);

// Throws Error(kUnknownSlotId). Duplicated ids count once.
Solution Evaluate(const Instance& instance, const Demand& demand,
                  std::span<const SlotId> selected);

// Same as Evaluate but over slot positions.
Solution EvaluateIndices(const Instance& instance, const Demand& demand,
                         std::span<const std::size_t> selected);

}  // namespace zonesel

#endif  // ZONESEL_MODEL_HPP_
