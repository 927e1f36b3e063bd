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

// Subcommand bodies behind the zonesel executable. Each returns the process
// exit code: 0 success, 2 infeasible result (solve) or violations found
// (validate), 1 error. Errors are reported on `err`.

#ifndef ZONESEL_CLI_HPP_
#define ZONESEL_CLI_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "zonesel/datagen.hpp"

namespace zonesel {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInfeasible = 2;

// Reads ZONESEL_NODE_BUDGET. Unset or empty gives nullopt; anything that is
// not a positive integer throws Error(kInvalidArgument).
std::optional<std::size_t> NodeBudgetFromEnv();

// "5,7,0" -> {5, 7, 0}. Empty string gives an empty list.
// Throws Error(kInvalidArgument).
std::vector<double> ParseSigmaList(const std::string& text);

struct SolveOptions {
  std::filesystem::path instance;
  // Missing entries are zero; an empty list means no zonal demand.
  std::vector<double> sigma;
  std::int64_t budget = 0;
  std::string algorithm = "bbs";
  double theta = 0.7;
  double epsilon = 0.1;
  std::uint64_t seed = 0;
  std::optional<std::size_t> node_budget;
};

// Prints one run record as JSON on `out`.
int CmdSolve(const SolveOptions& options, std::ostream& out, std::ostream& err);

// Writes results.csv, summary.csv and runs.jsonl into out_dir (created if
// missing).
int CmdExperiment(const std::filesystem::path& spec_path,
                  const std::filesystem::path& out_dir,
                  std::optional<std::size_t> node_budget, std::ostream& out,
                  std::ostream& err);

struct GenOptions {
  GenParams params;
  bool toy = false;
  std::filesystem::path out;
  // Demand JSON destination; when empty the demand goes to `out` stream.
  std::filesystem::path demand_out;
};

int CmdGen(const GenOptions& options, std::ostream& out, std::ostream& err);

struct IngestOptions {
  std::filesystem::path config;  // Optional; defaults apply when empty.
  std::filesystem::path billboards;
  std::filesystem::path checkins;
  std::filesystem::path out;
  std::filesystem::path rejected_out;  // Optional "line,reason" report.
};

// Prints a one-line summary (slots, users, rejected rows) on `out`.
int CmdIngest(const IngestOptions& options, std::ostream& out, std::ostream& err);

// Prints one JSON object per violation on `out`.
int CmdValidate(const std::filesystem::path& instance, std::ostream& out,
                std::ostream& err);

}  // namespace zonesel

#endif  // ZONESEL_CLI_HPP_
