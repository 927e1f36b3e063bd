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

#include "zonesel/experiment.hpp"

#include <cmath>
#include <iomanip>
#include <map>

#include "json.hpp"
#include "zonesel/io.hpp"

namespace zonesel {
namespace {

using nlohmann::json;

constexpr std::pair<SweepAxis, const char*> kAxisNames[] = {
    {SweepAxis::kBudget, "budget"},   {SweepAxis::kTheta, "theta"},
    {SweepAxis::kEpsilon, "epsilon"}, {SweepAxis::kEta, "eta"},
    {SweepAxis::kZones, "zones"},     {SweepAxis::kSlots, "slots"},
    {SweepAxis::kTrajectories, "trajectories"},
};

std::filesystem::path Resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  if (path.is_relative() && !base.empty()) return base / path;
  return path;
}

std::size_t AsCount(double v) {
  return static_cast<std::size_t>(std::llround(std::max(0.0, v)));
}

bool IsCountAxis(SweepAxis axis) {
  return axis == SweepAxis::kZones || axis == SweepAxis::kSlots ||
         axis == SweepAxis::kTrajectories || axis == SweepAxis::kBudget;
}

void ApplyDemandAxis(const ExperimentSpec& spec, double value, Demand& demand) {
  if (spec.axis == SweepAxis::kBudget) {
    demand.budget = static_cast<Cost>(std::llround(value));
  } else if (spec.axis == SweepAxis::kZones) {
    for (std::size_t j = AsCount(value); j < demand.sigma.size(); ++j) demand.sigma[j] = 0.0;
  }
}

struct Workload {
  Instance instance;
  Demand demand;
};

Instance Reshape(const ExperimentSpec& spec, double value, const Instance& base) {
  if (spec.axis == SweepAxis::kSlots) return TruncateSlots(base, AsCount(value));
  if (spec.axis == SweepAxis::kTrajectories) return TruncateUsers(base, AsCount(value));
  return base;
}

Workload BuildGenerated(const ExperimentSpec& spec, double value, std::size_t rep) {
  GenParams params = *spec.generator;
  params.seed = spec.seed + rep;
  if (spec.axis == SweepAxis::kSlots) params.n_slots = AsCount(value);
  if (spec.axis == SweepAxis::kTrajectories) params.n_users = AsCount(value);
  GeneratedInstance g = Generate(params);
  return {std::move(g.instance), std::move(g.demand)};
}

Workload BuildIngested(const ExperimentSpec& spec, double value) {
  IngestConfig config = spec.ingest->config;
  if (spec.axis == SweepAxis::kEta) config.eta_meters = value;
  Instance inst = Reshape(
      spec, value, Ingest(spec.ingest->billboards, spec.ingest->checkins, config).instance);
  Demand demand = ProportionalDemand(inst, spec.ingest->demand_fraction,
                                     spec.ingest->budget_fraction);
  return {std::move(inst), std::move(demand)};
}

std::string Num(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

}  // namespace

const char* ToString(SweepAxis axis) {
  for (const auto& [a, name] : kAxisNames) {
    if (a == axis) return name;
  }
  return "unknown";
}

std::optional<SweepAxis> ParseSweepAxis(std::string_view name) {
  for (const auto& [a, n] : kAxisNames) {
    if (name == n) return a;
  }
  return std::nullopt;
}

ExperimentSpec ParseExperimentSpec(const std::string& text,
                                   const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("experiment spec: ") + e.what());
  }
  ExperimentSpec spec;
  try {
    const json& src = doc.at("source");
    if (src.contains("generator")) {
      spec.generator = GenParamsFromJson(src.at("generator").dump());
    }
    if (src.contains("file")) {
      FileSource f;
      f.instance = Resolve(base_dir, src.at("file").get<std::string>());
      f.demand = DemandFromJson(src.at("demand").dump());
      spec.file = std::move(f);
    }
    if (src.contains("ingest")) {
      const json& in = src.at("ingest");
      IngestSource s;
      s.billboards = Resolve(base_dir, in.at("billboards").get<std::string>());
      s.checkins = Resolve(base_dir, in.at("checkins").get<std::string>());
      if (in.contains("config")) s.config = IngestConfigFromJson(in.at("config").dump());
      s.demand_fraction = in.value("demand_fraction", s.demand_fraction);
      s.budget_fraction = in.value("budget_fraction", s.budget_fraction);
      spec.ingest = std::move(s);
    }
    for (const json& a : doc.at("algorithms")) {
      auto name = a.get<std::string>();
      auto algo = ParseAlgorithm(name);
      if (!algo) throw Error(ErrorCode::kParseError, "unknown algorithm: " + name);
      spec.algorithms.push_back(*algo);
    }
    auto axis_name = doc.at("axis").get<std::string>();
    auto axis = ParseSweepAxis(axis_name);
    if (!axis) throw Error(ErrorCode::kParseError, "unknown sweep axis: " + axis_name);
    spec.axis = *axis;
    doc.at("values").get_to(spec.values);
    spec.repetitions = doc.value("repetitions", spec.repetitions);
    spec.seed = doc.value("seed", spec.seed);
    spec.theta = doc.value("theta", spec.theta);
    spec.epsilon = doc.value("epsilon", spec.epsilon);
    if (doc.contains("node_budget") && !doc.at("node_budget").is_null()) {
      spec.node_budget = doc.at("node_budget").get<std::size_t>();
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("experiment spec: ") + e.what());
  }
  return spec;
}

std::vector<std::string> ValidateExperimentSpec(const ExperimentSpec& spec) {
  std::vector<std::string> out;
  int sources = static_cast<int>(spec.generator.has_value()) +
                static_cast<int>(spec.file.has_value()) +
                static_cast<int>(spec.ingest.has_value());
  if (sources != 1) out.push_back("exactly one instance source is required");
  if (spec.algorithms.empty()) out.push_back("algorithm list is empty");
  if (spec.values.empty()) out.push_back("sweep values are empty");
  if (spec.repetitions == 0) out.push_back("repetitions must be positive");
  for (double v : spec.values) {
    if (!std::isfinite(v) || v < 0.0) {
      out.push_back("sweep values must be finite and non-negative");
      break;
    }
    if (IsCountAxis(spec.axis) && v != std::floor(v)) {
      out.push_back(std::string("sweep values for axis ") + ToString(spec.axis) +
                    " must be integers");
      break;
    }
  }
  if (spec.axis == SweepAxis::kEta && !spec.ingest) {
    out.push_back("the eta axis needs an ingest source");
  }
  SolverConfig config;
  config.theta = spec.theta;
  config.epsilon = spec.epsilon;
  for (auto& msg : ValidateConfig(config)) out.push_back(msg);
  if (spec.generator) {
    for (auto& msg : ValidateGenParams(*spec.generator)) out.push_back(msg);
  }
  if (spec.ingest) {
    for (auto& msg : ValidateIngestConfig(spec.ingest->config)) out.push_back(msg);
  }
  bool wants_exact = false;
  for (Algorithm a : spec.algorithms) wants_exact |= a == Algorithm::kExact;
  if (wants_exact && spec.generator) {
    bool too_large = spec.axis == SweepAxis::kSlots
                         ? std::any_of(spec.values.begin(), spec.values.end(),
                                       [](double v) { return AsCount(v) > kExactSlotLimit; })
                         : spec.generator->n_slots > kExactSlotLimit;
    if (too_large) {
      out.push_back("exact needs at most " + std::to_string(kExactSlotLimit) + " slots");
    }
  }
  return out;
}

Instance TruncateSlots(const Instance& instance, std::size_t n) {
  n = std::min(n, instance.num_slots());
  std::vector<Slot> slots(instance.slots().begin(), instance.slots().begin() + n);
  std::vector<std::vector<Exposure>> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = instance.row(i);
    rows.emplace_back(row.begin(), row.end());
  }
  return Instance(std::move(slots), instance.zones(),
                  InfluenceMatrix(instance.num_users(), std::move(rows)));
}

Instance TruncateUsers(const Instance& instance, std::size_t n) {
  std::vector<std::vector<Exposure>> rows(instance.num_slots());
  for (std::size_t i = 0; i < instance.num_slots(); ++i) {
    for (const Exposure& e : instance.row(i)) {
      if (e.user < n) rows[i].push_back(e);
    }
  }
  return Instance(instance.slots(), instance.zones(), InfluenceMatrix(n, std::move(rows)));
}

std::vector<ExperimentRow> RunExperiment(const ExperimentSpec& spec) {
  auto problems = ValidateExperimentSpec(spec);
  if (!problems.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "invalid experiment spec: " + problems[0]);
  }
  std::optional<Instance> file_instance;
  if (spec.file) file_instance = LoadInstance(spec.file->instance);

  std::vector<ExperimentRow> rows;
  for (double value : spec.values) {
    std::optional<Workload> shared;
    if (spec.file) {
      shared = Workload{Reshape(spec, value, *file_instance), spec.file->demand};
    } else if (spec.ingest) {
      shared = BuildIngested(spec, value);
    }
    for (std::size_t rep = 0; rep < spec.repetitions; ++rep) {
      Workload work = shared ? *shared : BuildGenerated(spec, value, rep);
      ApplyDemandAxis(spec, value, work.demand);
      SelectionProblem problem(work.instance, work.demand);

      SolverConfig config;
      config.theta = spec.axis == SweepAxis::kTheta ? value : spec.theta;
      config.epsilon = spec.axis == SweepAxis::kEpsilon ? value : spec.epsilon;
      config.seed = spec.seed + rep;
      config.node_budget = spec.node_budget;

      for (Algorithm algo : spec.algorithms) {
        if (algo == Algorithm::kExact && work.instance.num_slots() > kExactSlotLimit) {
          throw Error(ErrorCode::kInvalidArgument,
                      "exact needs at most " + std::to_string(kExactSlotLimit) + " slots");
        }
        rows.push_back({value, rep, RunAlgorithm(algo, problem, config)});
      }
    }
  }
  return rows;
}

void WriteResultsCsv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << "axis_value,algorithm,rep,influence,cost,feasible,wall_time_ms,nodes_expanded\n";
  for (const ExperimentRow& r : rows) {
    const Solution& s = r.record.solution;
    out << Num(r.axis_value) << ',' << ToString(r.record.algorithm) << ',' << r.rep << ','
        << Num(s.total_influence) << ',' << s.total_cost << ',' << (s.feasible ? 1 : 0) << ','
        << Num(r.record.wall_time_ms) << ',' << r.record.nodes_expanded << '\n';
  }
}

void WriteSummaryCsv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  struct Acc {
    std::size_t n = 0;
    double influence = 0, cost = 0, feasible = 0, wall = 0, nodes = 0;
  };
  std::vector<std::pair<double, Algorithm>> order;
  std::map<std::pair<double, int>, Acc> acc;
  for (const ExperimentRow& r : rows) {
    auto key = std::make_pair(r.axis_value, static_cast<int>(r.record.algorithm));
    auto [it, fresh] = acc.try_emplace(key);
    if (fresh) order.emplace_back(r.axis_value, r.record.algorithm);
    Acc& a = it->second;
    const Solution& s = r.record.solution;
    ++a.n;
    a.influence += s.total_influence;
    a.cost += static_cast<double>(s.total_cost);
    a.feasible += s.feasible ? 1.0 : 0.0;
    a.wall += r.record.wall_time_ms;
    a.nodes += static_cast<double>(r.record.nodes_expanded);
  }
  out << "axis_value,algorithm,runs,mean_influence,mean_cost,feasible_rate,"
         "mean_wall_time_ms,mean_nodes_expanded\n";
  for (const auto& [value, algo] : order) {
    const Acc& a = acc.at({value, static_cast<int>(algo)});
    const double n = static_cast<double>(a.n);
    out << Num(value) << ',' << ToString(algo) << ',' << a.n << ',' << Num(a.influence / n)
        << ',' << Num(a.cost / n) << ',' << Num(a.feasible / n) << ',' << Num(a.wall / n)
        << ',' << Num(a.nodes / n) << '\n';
  }
}

void WriteRunsJsonl(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  for (const ExperimentRow& r : rows) {
    json line = {{"axis_value", r.axis_value},
                 {"rep", r.rep},
                 {"run", json::parse(RunRecordToJson(r.record))}};
    out << line.dump() << '\n';
  }
}

}  // namespace zonesel
