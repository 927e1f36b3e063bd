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

// Raw billboard and check-in files to Instance.
//
// Pipeline: load CSVs -> one slot per (billboard, window) -> zone grid ->
// distance/time hit counting -> Pr(slot, user) = 1 - (1 - p_hit)^hits ->
// cost = max(1, floor(delta * I({slot}) / 10)).

#ifndef ZONESEL_INGEST_HPP_
#define ZONESEL_INGEST_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zonesel/model.hpp"

namespace zonesel {

inline constexpr double kEarthRadiusMeters = 6371008.8;

struct BillboardRecord {
  std::int64_t billboard_id = 0;
  double lat = 0.0;
  double lon = 0.0;
};

struct CheckinRecord {
  std::int64_t user_id = 0;
  double lat = 0.0;
  double lon = 0.0;
  std::int64_t timestamp = 0;
};

struct ZoneGrid {
  int rows = 1;
  int cols = 1;
  // Defaults to the billboards' bounding box.
  std::optional<BoundingBox> bounds;
};

struct IngestConfig {
  std::int64_t t1 = 0;
  std::int64_t t2 = 3600;
  std::int64_t delta = 3600;
  double eta_meters = 100.0;
  double p_hit = 0.1;
  ZoneGrid zone_grid;
  double cost_delta_min = 0.8;
  double cost_delta_max = 1.1;
  std::uint64_t seed = 0;
};

// Empty when t1 < t2, delta divides t2 - t1, eta > 0, p_hit in (0, 1],
// grid dimensions positive and the cost range ordered.
std::vector<std::string> ValidateIngestConfig(const IngestConfig& config);

struct RejectedRow {
  std::size_t line = 0;
  std::string reason;
};

struct LoadReport {
  std::vector<RejectedRow> rejected;
  // Rows dropped for falling outside [t1, t2).
  std::size_t filtered = 0;
};

struct BillboardLoad {
  std::vector<BillboardRecord> records;
  LoadReport report;
};

struct CheckinLoad {
  std::vector<CheckinRecord> records;
  LoadReport report;
};

// CSV with header `billboard_id,lat,lon[,...]`.
// Throws Error(kFileNotFound) or Error(kHeaderMismatch).
BillboardLoad LoadBillboards(const std::filesystem::path& path);
BillboardLoad ParseBillboards(std::istream& in);

// CSV with header `user_id,lat,lon,timestamp`. When `window` is set, rows
// with timestamps outside [first, second) are counted as filtered.
CheckinLoad LoadCheckins(
    const std::filesystem::path& path,
    std::optional<std::pair<std::int64_t, std::int64_t>> window = std::nullopt);
CheckinLoad ParseCheckins(
    std::istream& in,
    std::optional<std::pair<std::int64_t, std::int64_t>> window = std::nullopt);

void WriteRejectedReport(std::ostream& out, const LoadReport& report);

double HaversineMeters(double lat1, double lon1, double lat2, double lon2);

// One slot per (billboard, window), ordered by (billboard_id, time_index),
// with slot_id equal to position. Costs are 1 and zones 0 until assigned.
std::vector<Slot> ExpandSlots(const std::vector<BillboardRecord>& billboards,
                              const IngestConfig& config);

// Row-major grid cell of the slot's billboard. Cells are closed-open, so a
// billboard on an interior boundary belongs to the higher-index cell.
// Throws Error(kOutOfGrid).
std::pair<std::vector<Slot>, std::vector<Zone>> AssignZones(
    std::vector<Slot> slots, const std::vector<BillboardRecord>& billboards,
    const ZoneGrid& grid);

// Users are numbered densely in ascending user_id order.
InfluenceMatrix BuildInfluenceMatrix(
    const std::vector<Slot>& slots,
    const std::vector<BillboardRecord>& billboards,
    const std::vector<CheckinRecord>& checkins, const IngestConfig& config);

// max(1, floor(delta * influence / 10)).
Cost SlotCost(double singleton_influence, double delta);

// Draws one delta per slot, in slot order, uniformly from the range.
std::vector<Slot> AssignCosts(std::vector<Slot> slots,
                              const InfluenceMatrix& matrix, double delta_min,
                              double delta_max, std::uint64_t seed);

struct IngestResult {
  Instance instance;
  LoadReport billboard_report;
  LoadReport checkin_report;
};

// Whole pipeline over in-memory records.
Instance BuildInstance(const std::vector<BillboardRecord>& billboards,
                       const std::vector<CheckinRecord>& checkins,
                       const IngestConfig& config);

// Whole pipeline from files. Throws Error(kInvalidArgument) for a bad config.
IngestResult Ingest(const std::filesystem::path& billboards_csv,
                    const std::filesystem::path& checkins_csv,
                    const IngestConfig& config);

}  // namespace zonesel

#endif  // ZONESEL_INGEST_HPP_
