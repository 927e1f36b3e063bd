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

// zonesel: solve, sweep, generate, ingest and validate slot-selection
// instances.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "zonesel/cli.hpp"
#include "zonesel/model.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Budgeted billboard slot selection under zonal influence demands"};
  app.require_subcommand(1);

  zonesel::SolveOptions solve;
  std::string sigma_text;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance and print the run record");
  solve_cmd->add_option("--instance", solve.instance, "Instance JSON")->required();
  solve_cmd->add_option("--demand", sigma_text, "Per-zone demands, e.g. 5,7,0");
  solve_cmd->add_option("--budget", solve.budget, "Total budget")->required();
  solve_cmd->add_option("--algo", solve.algorithm,
                        "greedy, bbs, bfbs, topk, random or exact")
      ->capture_default_str();
  solve_cmd->add_option("--theta", solve.theta, "Termination ratio")->capture_default_str();
  solve_cmd->add_option("--epsilon", solve.epsilon, "Threshold decay")->capture_default_str();
  solve_cmd->add_option("--seed", solve.seed, "Seed for randomized solvers")
      ->capture_default_str();

  std::string spec_path;
  std::string out_dir;
  auto* exp_cmd = app.add_subcommand("experiment", "Run a parameter sweep");
  exp_cmd->add_option("--spec", spec_path, "Experiment spec JSON")->required();
  exp_cmd->add_option("--out", out_dir, "Output directory")->required();

  zonesel::GenOptions gen;
  std::string gen_out;
  std::string gen_demand_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic instance");
  gen_cmd->add_flag("--toy", gen.toy, "Write the four-slot worked example");
  gen_cmd->add_option("--slots", gen.params.n_slots)->capture_default_str();
  gen_cmd->add_option("--users", gen.params.n_users)->capture_default_str();
  gen_cmd->add_option("--zones", gen.params.n_zones)->capture_default_str();
  gen_cmd->add_option("--density", gen.params.coverage_density, "Mean users per slot")
      ->capture_default_str();
  gen_cmd->add_option("--demand-fraction", gen.params.demand_fraction)->capture_default_str();
  gen_cmd->add_option("--budget-fraction", gen.params.budget_fraction)->capture_default_str();
  gen_cmd->add_option("--seed", gen.params.seed)->capture_default_str();
  gen_cmd->add_option("--out", gen_out, "Instance JSON to write")->required();
  gen_cmd->add_option("--demand-out", gen_demand_out,
                      "Demand JSON to write (stdout when omitted)");

  zonesel::IngestOptions ingest;
  std::string ingest_config, billboards, checkins, ingest_out, rejected_out;
  auto* ingest_cmd = app.add_subcommand("ingest", "Build an instance from CSV files");
  ingest_cmd->add_option("--config", ingest_config, "Ingest config JSON");
  ingest_cmd->add_option("--billboards", billboards, "billboard_id,lat,lon CSV")->required();
  ingest_cmd->add_option("--checkins", checkins, "user_id,lat,lon,timestamp CSV")->required();
  ingest_cmd->add_option("--out", ingest_out, "Instance JSON to write")->required();
  ingest_cmd->add_option("--rejected", rejected_out, "Rejected-row report");

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check instance invariants");
  validate_cmd->add_option("--instance", validate_path, "Instance JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? zonesel::kExitOk : zonesel::kExitError;
  }

  std::optional<std::size_t> node_budget;
  try {
    node_budget = zonesel::NodeBudgetFromEnv();
  } catch (const zonesel::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return zonesel::kExitError;
  }

  if (*solve_cmd) {
    try {
      solve.sigma = zonesel::ParseSigmaList(sigma_text);
    } catch (const zonesel::Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return zonesel::kExitError;
    }
    solve.node_budget = node_budget;
    return zonesel::CmdSolve(solve, std::cout, std::cerr);
  }
  if (*exp_cmd) {
    return zonesel::CmdExperiment(spec_path, out_dir, node_budget, std::cout, std::cerr);
  }
  if (*gen_cmd) {
    gen.out = gen_out;
    gen.demand_out = gen_demand_out;
    return zonesel::CmdGen(gen, std::cout, std::cerr);
  }
  if (*ingest_cmd) {
    ingest.config = ingest_config;
    ingest.billboards = billboards;
    ingest.checkins = checkins;
    ingest.out = ingest_out;
    ingest.rejected_out = rejected_out;
    return zonesel::CmdIngest(ingest, std::cout, std::cerr);
  }
  return zonesel::CmdValidate(validate_path, std::cout, std::cerr);
}
