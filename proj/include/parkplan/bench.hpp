// Copyright 2026 The parkplan Authors
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

#ifndef PARKPLAN_BENCH_HPP_
#define PARKPLAN_BENCH_HPP_

#include <iosfwd>
#include <span>
#include <string>

#include "parkplan/planner.hpp"

namespace parkplan {

/// One planner run of a benchmark campaign. Times and costs are only
/// meaningful when the goal was found.
struct TrialRecord {
  std::uint64_t seed = 0;
  bool goal_found = false;
  double time_s = 0.0;     // time to the first path
  double pre_cost = 0.0;
  double post_cost = 0.0;
  std::uint64_t iterations = 0;
  NNCostMode nn_mode = NNCostMode::Euclidean;
  OptMode opt_mode = OptMode::Dijkstra;
};

struct BenchOptions {
  std::uint32_t n_trials = 200;
  std::uint64_t seed0 = 1;
  std::uint32_t parallelism = 1;
  // Drop a fresh random 0.5 m obstacle (derived from the trial seed) on the
  // street for every trial.
  bool random_obstacle = false;
};

/// Summary statistics over the successful trials of a campaign. Percentiles
/// are nearest-rank; they are NaN when no trial succeeded.
struct BenchSummary {
  std::uint32_t trials = 0;
  std::uint32_t successes = 0;
  double success_rate = 0.0;
  double time_p50 = 0.0, time_p95 = 0.0;
  double pre_p50 = 0.0, pre_p95 = 0.0;
  double post_p50 = 0.0, post_p95 = 0.0;
};

/// Nearest-rank percentile: the ceil(p/100 * n)-th order statistic. Throws
/// std::invalid_argument on an empty input.
double percentile(std::span<const double> values, double p);

/// Runs plan() once per seed in [seed0, seed0 + n_trials) with per-trial RNGs
/// and collects the records in seed order. Trials run on a pool of
/// `parallelism` workers; records do not depend on the parallelism level.
std::vector<TrialRecord> run_trials(const Scenario& scenario, const Car& car,
                                    const PlannerConfig& config,
                                    const BenchOptions& options);

BenchSummary summarize(std::span<const TrialRecord> records);

const char* nn_mode_name(NNCostMode mode);
const char* opt_mode_name(OptMode mode);

/// CSV schema: header row, then one row per trial with columns exactly
/// seed,goal_found,time_s,pre_cost,post_cost,iterations,nn_mode,opt_mode.
/// Failed trials leave the time and cost cells empty.
void write_csv(std::ostream& out, std::span<const TrialRecord> records);
std::string format_summary(const BenchSummary& summary);

}  // namespace parkplan

#endif  // PARKPLAN_BENCH_HPP_
