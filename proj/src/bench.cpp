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

#include "parkplan/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "parkplan/scenario_io.hpp"

namespace parkplan {

namespace {

// Obstacle draws must not alias the planner's sample stream for the same
// trial seed.
constexpr std::uint64_t kObstacleSalt = 0x9e3779b97f4a7c15ULL;

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

double percentile(std::span<const double> values, double p) {
  if (values.empty()) throw std::invalid_argument("percentile of empty input");
  if (p < 0.0 || p > 100.0) throw std::invalid_argument("percentile out of range");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  // tiny slack keeps exact ranks such as 0.95*100 from rounding up
  auto k = static_cast<std::size_t>(std::ceil(p / 100.0 * n - 1e-9));
  k = std::clamp<std::size_t>(k, 1, sorted.size());
  return sorted[k - 1];
}

const char* nn_mode_name(NNCostMode mode) {
  switch (mode) {
    case NNCostMode::Euclidean: return "euclidean";
    case NNCostMode::ReedsShepp: return "rs";
    case NNCostMode::ReedsSheppFlatHeading: return "rs-flat";
  }
  return "?";
}

const char* opt_mode_name(OptMode mode) {
  switch (mode) {
    case OptMode::None: return "none";
    case OptMode::Smart: return "smart";
    case OptMode::Dijkstra: return "dijkstra";
  }
  return "?";
}

std::vector<TrialRecord> run_trials(const Scenario& scenario, const Car& car,
                                    const PlannerConfig& config,
                                    const BenchOptions& options) {
  if (options.n_trials == 0) throw std::invalid_argument("n_trials must be >= 1");
  std::vector<TrialRecord> records(options.n_trials);

  const auto run_one = [&](std::uint32_t i) {
    const std::uint64_t seed = options.seed0 + i;
    PlannerConfig cfg = config;
    cfg.rng_seed = seed;
    Scenario local;
    const Scenario* scn = &scenario;
    if (options.random_obstacle) {
      std::mt19937_64 obstacle_rng(seed ^ kObstacleSalt);
      local = make_obstacle_scenario(scenario, car, obstacle_rng);
      scn = &local;
    }
    const PlanResult r = plan(*scn, car, cfg);
    TrialRecord& rec = records[i];
    rec.seed = seed;
    rec.goal_found = r.goal_found;
    rec.time_s = r.elapsed_to_first_path;
    rec.pre_cost = r.pre_opt_cost;
    rec.post_cost = r.post_opt_cost;
    rec.iterations = r.iterations;
    rec.nn_mode = cfg.nn_cost;
    rec.opt_mode = cfg.opt;
  };

  const std::uint32_t workers =
      std::min(std::max(options.parallelism, 1u), options.n_trials);
  if (workers <= 1) {
    for (std::uint32_t i = 0; i < options.n_trials; ++i) run_one(i);
  } else {
    std::atomic<std::uint32_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint32_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const std::uint32_t i = next.fetch_add(1);
          if (i >= options.n_trials) break;
          run_one(i);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }
  return records;
}

BenchSummary summarize(std::span<const TrialRecord> records) {
  BenchSummary s;
  s.trials = static_cast<std::uint32_t>(records.size());
  std::vector<double> times, pre, post;
  for (const TrialRecord& r : records) {
    if (!r.goal_found) continue;
    ++s.successes;
    times.push_back(r.time_s);
    pre.push_back(r.pre_cost);
    post.push_back(r.post_cost);
  }
  s.success_rate = s.trials == 0 ? 0.0
                                 : static_cast<double>(s.successes) /
                                       static_cast<double>(s.trials);
  if (s.successes == 0) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    s.time_p50 = s.time_p95 = s.pre_p50 = s.pre_p95 = s.post_p50 = s.post_p95 =
        nan;
    return s;
  }
  s.time_p50 = percentile(times, 50.0);
  s.time_p95 = percentile(times, 95.0);
  s.pre_p50 = percentile(pre, 50.0);
  s.pre_p95 = percentile(pre, 95.0);
  s.post_p50 = percentile(post, 50.0);
  s.post_p95 = percentile(post, 95.0);
  return s;
}

void write_csv(std::ostream& out, std::span<const TrialRecord> records) {
  out << "seed,goal_found,time_s,pre_cost,post_cost,iterations,nn_mode,opt_mode\n";
  for (const TrialRecord& r : records) {
    out << r.seed << ',' << (r.goal_found ? 1 : 0) << ',';
    if (r.goal_found) {
      out << fixed6(r.time_s) << ',' << fixed6(r.pre_cost) << ','
          << fixed6(r.post_cost);
    } else {
      out << ",,";
    }
    out << ',' << r.iterations << ',' << nn_mode_name(r.nn_mode) << ','
        << opt_mode_name(r.opt_mode) << '\n';
  }
}

std::string format_summary(const BenchSummary& s) {
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "trials: %u  successes: %u  success_rate: %.4f\n"
                "time_s    p50: %.6f  p95: %.6f\n"
                "pre_cost  p50: %.6f  p95: %.6f\n"
                "post_cost p50: %.6f  p95: %.6f\n",
                s.trials, s.successes, s.success_rate, s.time_p50, s.time_p95,
                s.pre_p50, s.pre_p95, s.post_p50, s.post_p95);
  return buf;
}

}  // namespace parkplan
