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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "zonesel/solvers.hpp"

namespace zonesel {
namespace {

// Sparse influence accumulator that only resets the users it touched.
class Scratch {
 public:
  explicit Scratch(std::size_t n_users)
      : residual_(n_users, 1.0), touched_flag_(n_users, false) {}

  void Add(std::span<const Exposure> row) {
    for (const Exposure& e : row) {
      if (!touched_flag_[e.user]) {
        touched_flag_[e.user] = true;
        touched_.push_back(e.user);
      }
      residual_[e.user] *= 1.0 - e.prob;
    }
  }

  // Returns the accumulated influence and clears.
  double Drain() {
    double total = 0.0;
    for (UserId u : touched_) {
      total += 1.0 - residual_[u];
      residual_[u] = 1.0;
      touched_flag_[u] = false;
    }
    touched_.clear();
    return total;
  }

 private:
  std::vector<double> residual_;
  std::vector<bool> touched_flag_;
  std::vector<UserId> touched_;
};

}  // namespace

Solution ExactBruteForce(const SelectionProblem& problem) {
  const Instance& instance = problem.instance();
  const Demand& demand = problem.demand();
  const std::size_t m = instance.num_slots();
  if (m > kExactSlotLimit) {
    throw Error(ErrorCode::kTooLarge,
                "exact enumeration supports at most " +
                    std::to_string(kExactSlotLimit) + " slots, got " +
                    std::to_string(m));
  }

  // Bit k stands for the k-th smallest slot id, so comparing masks by their
  // id lists gives the lexicographic tie-break directly.
  std::vector<std::size_t> by_id(m);
  std::iota(by_id.begin(), by_id.end(), std::size_t{0});
  std::sort(by_id.begin(), by_id.end(), [&](std::size_t a, std::size_t b) {
    return problem.id(a) < problem.id(b);
  });

  auto id_list = [&](std::uint64_t mask) {
    std::vector<SlotId> ids;
    for (std::size_t k = 0; k < m; ++k) {
      if (mask >> k & 1U) ids.push_back(problem.id(by_id[k]));
    }
    return ids;
  };

  Scratch scratch(instance.num_users());
  bool found = false;
  std::uint64_t best_mask = 0;
  double best_value = 0.0;
  std::vector<double> zonal(instance.num_zones());

  const std::uint64_t limit = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    Cost cost = 0;
    for (std::size_t k = 0; k < m; ++k) {
      if (mask >> k & 1U) cost += problem.cost(by_id[k]);
    }
    if (cost > demand.budget) continue;

    for (std::size_t zone = 0; zone < zonal.size(); ++zone) {
      if (!demand.Demands(zone)) continue;
      for (std::size_t k = 0; k < m; ++k) {
        std::size_t s = by_id[k];
        if ((mask >> k & 1U) &&
            static_cast<std::size_t>(instance.slot(s).zone_id) == zone) {
          scratch.Add(instance.row(s));
        }
      }
      zonal[zone] = scratch.Drain();
    }
    bool ok = true;
    for (std::size_t zone = 0; zone < zonal.size(); ++zone) {
      if (demand.Demands(zone) &&
          zonal[zone] < demand.sigma[zone] - kDemandTolerance) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    for (std::size_t k = 0; k < m; ++k) {
      if (mask >> k & 1U) scratch.Add(instance.row(by_id[k]));
    }
    double value = scratch.Drain();
    if (!found) {
      found = true;
      best_mask = mask;
      best_value = value;
      continue;
    }
    double slack = 1e-12 * std::max(1.0, std::abs(best_value));
    if (value > best_value + slack) {
      best_mask = mask;
      best_value = value;
    } else if (value >= best_value - slack && id_list(mask) < id_list(best_mask)) {
      best_mask = mask;
      best_value = std::max(best_value, value);
    }
  }

  if (!found) {
    Solution none = EvaluateIndices(instance, demand, {});
    none.feasible = false;
    return none;
  }
  std::vector<std::size_t> chosen;
  for (std::size_t k = 0; k < m; ++k) {
    if (best_mask >> k & 1U) chosen.push_back(by_id[k]);
  }
  return EvaluateIndices(instance, demand, chosen);
}

}  // namespace zonesel
