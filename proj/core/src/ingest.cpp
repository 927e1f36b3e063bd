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

#include "zonesel/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <string_view>
#include <unordered_map>

namespace zonesel {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> SplitCsv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(Trim(line.substr(start)));
      return out;
    }
    out.push_back(Trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

template <typename T>
bool ParseNumber(std::string_view text, T& out) {
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

bool ValidLatLon(double lat, double lon) {
  return std::isfinite(lat) && std::isfinite(lon) && lat >= -90.0 &&
         lat <= 90.0 && lon >= -180.0 && lon <= 180.0;
}

// Reads the header and checks its leading columns.
void ExpectHeader(std::istream& in, const std::vector<std::string_view>& want,
                  bool allow_extra) {
  std::string header;
  if (!std::getline(in, header)) {
    throw Error(ErrorCode::kHeaderMismatch, "missing header");
  }
  std::string_view h = header;
  if (h.substr(0, 3) == "\xEF\xBB\xBF") h.remove_prefix(3);
  auto cols = SplitCsv(h);
  bool ok = cols.size() == want.size() || (allow_extra && cols.size() > want.size());
  for (std::size_t i = 0; ok && i < want.size(); ++i) ok = cols[i] == want[i];
  if (!ok) {
    std::string expected;
    for (auto w : want) expected += (expected.empty() ? "" : ",") + std::string(w);
    throw Error(ErrorCode::kHeaderMismatch,
                "expected header '" + expected + "', got '" + header + "'");
  }
}

std::ifstream OpenOrThrow(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kFileNotFound, "cannot open " + path.string());
  }
  return in;
}

}  // namespace

std::vector<std::string> ValidateIngestConfig(const IngestConfig& config) {
  std::vector<std::string> out;
  if (!(config.t1 < config.t2)) out.push_back("t1 must be before t2");
  if (config.delta <= 0) {
    out.push_back("delta must be positive");
  } else if (config.t1 < config.t2 && (config.t2 - config.t1) % config.delta != 0) {
    out.push_back("delta must divide t2 - t1");
  }
  if (!(config.eta_meters > 0.0)) out.push_back("eta must be positive");
  if (!(config.p_hit > 0.0 && config.p_hit <= 1.0)) {
    out.push_back("p_hit must be in (0, 1]");
  }
  if (config.zone_grid.rows < 1 || config.zone_grid.cols < 1) {
    out.push_back("zone grid dimensions must be positive");
  }
  if (!(config.cost_delta_min > 0.0 &&
        config.cost_delta_min <= config.cost_delta_max)) {
    out.push_back("cost delta range must be positive and ordered");
  }
  return out;
}

BillboardLoad ParseBillboards(std::istream& in) {
  ExpectHeader(in, {"billboard_id", "lat", "lon"}, /*allow_extra=*/true);
  BillboardLoad out;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    auto cols = SplitCsv(line);
    BillboardRecord rec;
    if (cols.size() < 3 || !ParseNumber(cols[0], rec.billboard_id) ||
        !ParseNumber(cols[1], rec.lat) || !ParseNumber(cols[2], rec.lon)) {
      out.report.rejected.push_back({line_no, "malformed row"});
      continue;
    }
    if (!ValidLatLon(rec.lat, rec.lon)) {
      out.report.rejected.push_back({line_no, "coordinate out of range"});
      continue;
    }
    out.records.push_back(rec);
  }
  return out;
}

BillboardLoad LoadBillboards(const std::filesystem::path& path) {
  auto in = OpenOrThrow(path);
  return ParseBillboards(in);
}

CheckinLoad ParseCheckins(
    std::istream& in,
    std::optional<std::pair<std::int64_t, std::int64_t>> window) {
  ExpectHeader(in, {"user_id", "lat", "lon", "timestamp"}, /*allow_extra=*/false);
  CheckinLoad out;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    auto cols = SplitCsv(line);
    CheckinRecord rec;
    if (cols.size() != 4 || !ParseNumber(cols[0], rec.user_id) ||
        !ParseNumber(cols[1], rec.lat) || !ParseNumber(cols[2], rec.lon) ||
        !ParseNumber(cols[3], rec.timestamp)) {
      out.report.rejected.push_back({line_no, "malformed row"});
      continue;
    }
    if (!ValidLatLon(rec.lat, rec.lon)) {
      out.report.rejected.push_back({line_no, "coordinate out of range"});
      continue;
    }
    if (window && (rec.timestamp < window->first || rec.timestamp >= window->second)) {
      ++out.report.filtered;
      continue;
    }
    out.records.push_back(rec);
  }
  return out;
}

CheckinLoad LoadCheckins(
    const std::filesystem::path& path,
    std::optional<std::pair<std::int64_t, std::int64_t>> window) {
  auto in = OpenOrThrow(path);
  return ParseCheckins(in, window);
}

void WriteRejectedReport(std::ostream& out, const LoadReport& report) {
  out << "line,reason\n";
  for (const RejectedRow& r : report.rejected) {
    out << r.line << ',' << r.reason << '\n';
  }
}

double HaversineMeters(double lat1, double lon1, double lat2, double lon2) {
  constexpr double kRad = std::numbers::pi / 180.0;
  const double dlat = (lat2 - lat1) * kRad;
  const double dlon = (lon2 - lon1) * kRad;
  const double a = std::sin(dlat / 2) * std::sin(dlat / 2) +
                   std::cos(lat1 * kRad) * std::cos(lat2 * kRad) *
                       std::sin(dlon / 2) * std::sin(dlon / 2);
  return 2.0 * kEarthRadiusMeters * std::asin(std::min(1.0, std::sqrt(a)));
}

std::vector<Slot> ExpandSlots(const std::vector<BillboardRecord>& billboards,
                              const IngestConfig& config) {
  std::vector<std::int64_t> ids;
  ids.reserve(billboards.size());
  for (const auto& b : billboards) ids.push_back(b.billboard_id);
  std::sort(ids.begin(), ids.end());

  const std::int64_t windows = (config.t2 - config.t1) / config.delta;
  std::vector<Slot> slots;
  slots.reserve(ids.size() * static_cast<std::size_t>(std::max<std::int64_t>(windows, 0)));
  for (std::int64_t id : ids) {
    for (std::int64_t k = 0; k < windows; ++k) {
      Slot s;
      s.slot_id = static_cast<SlotId>(slots.size());
      s.billboard_id = id;
      s.time_index = k;
      slots.push_back(s);
    }
  }
  return slots;
}

std::pair<std::vector<Slot>, std::vector<Zone>> AssignZones(
    std::vector<Slot> slots, const std::vector<BillboardRecord>& billboards,
    const ZoneGrid& grid) {
  if (grid.rows < 1 || grid.cols < 1) {
    throw Error(ErrorCode::kInvalidArgument, "zone grid must be at least 1x1");
  }
  BoundingBox box;
  if (grid.bounds) {
    box = *grid.bounds;
  } else if (!billboards.empty()) {
    box = {billboards[0].lat, billboards[0].lat, billboards[0].lon,
           billboards[0].lon};
    for (const auto& b : billboards) {
      box.lat_min = std::min(box.lat_min, b.lat);
      box.lat_max = std::max(box.lat_max, b.lat);
      box.lon_min = std::min(box.lon_min, b.lon);
      box.lon_max = std::max(box.lon_max, b.lon);
    }
  }
  const double lat_span = box.lat_max - box.lat_min;
  const double lon_span = box.lon_max - box.lon_min;

  std::vector<Zone> zones;
  for (int r = 0; r < grid.rows; ++r) {
    for (int c = 0; c < grid.cols; ++c) {
      Zone z;
      z.zone_id = r * grid.cols + c;
      z.bbox.lat_min = box.lat_min + lat_span * r / grid.rows;
      z.bbox.lat_max = box.lat_min + lat_span * (r + 1) / grid.rows;
      z.bbox.lon_min = box.lon_min + lon_span * c / grid.cols;
      z.bbox.lon_max = box.lon_min + lon_span * (c + 1) / grid.cols;
      zones.push_back(z);
    }
  }

  // Points within this many degrees outside the box are clamped inside.
  constexpr double kSlack = 1e-9;
  auto cell = [&](double v, double lo, double span, int n, std::int64_t id) {
    if (v < lo - kSlack || v > lo + span + kSlack) {
      throw Error(ErrorCode::kOutOfGrid,
                  "billboard " + std::to_string(id) + " lies outside the grid");
    }
    if (span <= 0.0) return 0;
    int k = static_cast<int>(std::floor((v - lo) / span * n));
    return std::clamp(k, 0, n - 1);
  };

  std::unordered_map<std::int64_t, int> zone_of;
  for (const auto& b : billboards) {
    int row = cell(b.lat, box.lat_min, lat_span, grid.rows, b.billboard_id);
    int col = cell(b.lon, box.lon_min, lon_span, grid.cols, b.billboard_id);
    zone_of[b.billboard_id] = row * grid.cols + col;
  }
  for (Slot& s : slots) {
    auto it = zone_of.find(s.billboard_id);
    if (it == zone_of.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "slot references unknown billboard " +
                      std::to_string(s.billboard_id));
    }
    s.zone_id = it->second;
  }
  return {std::move(slots), std::move(zones)};
}

InfluenceMatrix BuildInfluenceMatrix(
    const std::vector<Slot>& slots,
    const std::vector<BillboardRecord>& billboards,
    const std::vector<CheckinRecord>& checkins, const IngestConfig& config) {
  std::map<std::int64_t, UserId> user_index;
  for (const auto& c : checkins) user_index.emplace(c.user_id, 0);
  UserId next = 0;
  for (auto& [id, idx] : user_index) idx = next++;

  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> slot_of;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    slot_of[{slots[i].billboard_id, slots[i].time_index}] = i;
  }

  // Billboards sorted by latitude; the haversine distance is at least
  // R * |dlat|, so the latitude band is an exact prefilter.
  std::vector<BillboardRecord> by_lat = billboards;
  std::sort(by_lat.begin(), by_lat.end(),
            [](const auto& a, const auto& b) { return a.lat < b.lat; });
  const double band_deg =
      config.eta_meters / kEarthRadiusMeters * 180.0 / std::numbers::pi * 1.000001;

  const std::int64_t windows = (config.t2 - config.t1) / config.delta;
  std::vector<std::map<UserId, int>> hits(slots.size());
  for (const auto& c : checkins) {
    if (c.timestamp < config.t1 || c.timestamp >= config.t2) continue;
    const std::int64_t k = (c.timestamp - config.t1) / config.delta;
    if (k >= windows) continue;
    auto lo = std::lower_bound(
        by_lat.begin(), by_lat.end(), c.lat - band_deg,
        [](const BillboardRecord& b, double v) { return b.lat < v; });
    for (auto it = lo; it != by_lat.end() && it->lat <= c.lat + band_deg; ++it) {
      if (HaversineMeters(it->lat, it->lon, c.lat, c.lon) > config.eta_meters) {
        continue;
      }
      auto s = slot_of.find({it->billboard_id, k});
      if (s == slot_of.end()) continue;
      ++hits[s->second][user_index.at(c.user_id)];
    }
  }

  std::vector<std::vector<Exposure>> rows(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    for (const auto& [user, h] : hits[i]) {
      rows[i].push_back({user, 1.0 - std::pow(1.0 - config.p_hit, h)});
    }
  }
  return InfluenceMatrix(user_index.size(), std::move(rows));
}

Cost SlotCost(double singleton_influence, double delta) {
  auto raw = static_cast<Cost>(std::floor(delta * singleton_influence / 10.0));
  return std::max<Cost>(1, raw);
}

std::vector<Slot> AssignCosts(std::vector<Slot> slots,
                              const InfluenceMatrix& matrix, double delta_min,
                              double delta_max, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> draw(delta_min, delta_max);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    double influence = 0.0;
    if (i < matrix.n_rows()) {
      for (const Exposure& e : matrix.row(i)) influence += e.prob;
    }
    slots[i].cost = SlotCost(influence, draw(rng));
  }
  return slots;
}

Instance BuildInstance(const std::vector<BillboardRecord>& billboards,
                       const std::vector<CheckinRecord>& checkins,
                       const IngestConfig& config) {
  auto problems = ValidateIngestConfig(config);
  if (!problems.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "invalid ingest config: " + problems[0]);
  }
  std::vector<Slot> slots = ExpandSlots(billboards, config);
  auto [zoned, zones] = AssignZones(std::move(slots), billboards, config.zone_grid);
  InfluenceMatrix matrix = BuildInfluenceMatrix(zoned, billboards, checkins, config);
  std::vector<Slot> costed =
      AssignCosts(std::move(zoned), matrix, config.cost_delta_min,
                  config.cost_delta_max, config.seed);
  return Instance(std::move(costed), std::move(zones), std::move(matrix));
}

IngestResult Ingest(const std::filesystem::path& billboards_csv,
                    const std::filesystem::path& checkins_csv,
                    const IngestConfig& config) {
  auto problems = ValidateIngestConfig(config);
  if (!problems.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "invalid ingest config: " + problems[0]);
  }
  BillboardLoad billboards = LoadBillboards(billboards_csv);
  CheckinLoad checkins =
      LoadCheckins(checkins_csv, std::make_pair(config.t1, config.t2));
  IngestResult out;
  out.instance = BuildInstance(billboards.records, checkins.records, config);
  out.billboard_report = std::move(billboards.report);
  out.checkin_report = std::move(checkins.report);
  return out;
}

}  // namespace zonesel
