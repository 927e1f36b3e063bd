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

#include "zonesel/cli.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "zonesel/experiment.hpp"
#include "zonesel/ingest.hpp"
#include "zonesel/io.hpp"
#include "zonesel/solvers.hpp"

namespace zonesel {
namespace {

template <typename Fn>
int Guard(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << ToString(e.code()) << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

void WriteStream(const std::filesystem::path& path,
                 const std::function<void(std::ostream&)>& body) {
  std::ostringstream buf;
  body(buf);
  WriteFile(path, buf.str());
}

}  // namespace

std::optional<std::size_t> NodeBudgetFromEnv() {
  const char* raw = std::getenv("ZONESEL_NODE_BUDGET");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  std::string_view text(raw);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "ZONESEL_NODE_BUDGET must be a positive integer, got '" + std::string(text) +
                    "'");
  }
  return value;
}

std::vector<double> ParseSigmaList(const std::string& text) {
  std::vector<double> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (item.empty() || used != item.size()) {
      throw Error(ErrorCode::kInvalidArgument, "bad demand value '" + item + "'");
    }
    out.push_back(v);
  }
  if (!text.empty() && text.back() == ',') {
    throw Error(ErrorCode::kInvalidArgument, "trailing comma in demand list");
  }
  return out;
}

int CmdSolve(const SolveOptions& options, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    auto algo = ParseAlgorithm(options.algorithm);
    if (!algo) {
      throw Error(ErrorCode::kInvalidArgument, "unknown algorithm '" + options.algorithm + "'");
    }
    SolverConfig config;
    config.theta = options.theta;
    config.epsilon = options.epsilon;
    config.seed = options.seed;
    config.node_budget = options.node_budget;
    auto problems = ValidateConfig(config);
    if (!problems.empty()) throw Error(ErrorCode::kInvalidArgument, problems[0]);

    Instance instance = LoadInstance(options.instance);
    Demand demand{options.sigma, options.budget};
    if (demand.sigma.size() < instance.num_zones()) demand.sigma.resize(instance.num_zones());
    if (*algo == Algorithm::kExact && instance.num_slots() > kExactSlotLimit) {
      throw Error(ErrorCode::kTooLarge,
                  "exact needs at most " + std::to_string(kExactSlotLimit) + " slots");
    }
    SelectionProblem problem(instance, demand);
    RunRecord record = RunAlgorithm(*algo, problem, config);
    out << RunRecordToJson(record) << '\n';
    return record.solution.feasible ? kExitOk : kExitInfeasible;
  });
}

int CmdExperiment(const std::filesystem::path& spec_path,
                  const std::filesystem::path& out_dir,
                  std::optional<std::size_t> node_budget, std::ostream& out,
                  std::ostream& err) {
  return Guard(err, [&] {
    ExperimentSpec spec =
        ParseExperimentSpec(ReadFile(spec_path), spec_path.parent_path());
    if (node_budget) spec.node_budget = node_budget;
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw Error(ErrorCode::kIoError, "cannot create " + out_dir.string());
    auto rows = RunExperiment(spec);
    WriteStream(out_dir / "results.csv", [&](std::ostream& s) { WriteResultsCsv(s, rows); });
    WriteStream(out_dir / "summary.csv", [&](std::ostream& s) { WriteSummaryCsv(s, rows); });
    WriteStream(out_dir / "runs.jsonl", [&](std::ostream& s) { WriteRunsJsonl(s, rows); });
    out << rows.size() << " runs written to " << out_dir.string() << '\n';
    return kExitOk;
  });
}

int CmdGen(const GenOptions& options, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    if (options.out.empty()) throw Error(ErrorCode::kInvalidArgument, "--out is required");
    GeneratedInstance g = options.toy ? ToyInstance() : Generate(options.params);
    SaveInstance(options.out, g.instance);
    std::string demand = DemandToJson(g.demand);
    if (options.demand_out.empty()) {
      out << demand << '\n';
    } else {
      WriteFile(options.demand_out, demand + "\n");
    }
    return kExitOk;
  });
}

int CmdIngest(const IngestOptions& options, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    if (options.out.empty()) throw Error(ErrorCode::kInvalidArgument, "--out is required");
    IngestConfig config;
    if (!options.config.empty()) config = IngestConfigFromJson(ReadFile(options.config));
    IngestResult result = Ingest(options.billboards, options.checkins, config);
    SaveInstance(options.out, result.instance);
    if (!options.rejected_out.empty()) {
      LoadReport merged = result.billboard_report;
      merged.rejected.insert(merged.rejected.end(), result.checkin_report.rejected.begin(),
                             result.checkin_report.rejected.end());
      WriteStream(options.rejected_out,
                  [&](std::ostream& s) { WriteRejectedReport(s, merged); });
    }
    out << "slots=" << result.instance.num_slots()
        << " users=" << result.instance.num_users()
        << " zones=" << result.instance.num_zones()
        << " rejected_billboards=" << result.billboard_report.rejected.size()
        << " rejected_checkins=" << result.checkin_report.rejected.size()
        << " filtered_checkins=" << result.checkin_report.filtered << '\n';
    return kExitOk;
  });
}

int CmdValidate(const std::filesystem::path& instance, std::ostream& out,
                std::ostream& err) {
  return Guard(err, [&] {
    Instance inst = LoadInstance(instance);
    auto violations = ValidateInstance(inst);
    for (const Violation& v : violations) {
      nlohmann::json line = {{"kind", ToString(v.kind)}, {"detail", v.detail}};
      line["slot_id"] = v.slot_id ? nlohmann::json(*v.slot_id) : nlohmann::json(nullptr);
      out << line.dump() << '\n';
    }
    return violations.empty() ? kExitOk : kExitInfeasible;
  });
}

}  // namespace zonesel
