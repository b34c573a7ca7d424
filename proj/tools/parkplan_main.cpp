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

// Command-line front end; talks to the planner exclusively through the C API.

#include <cinttypes>
#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "parkplan.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoPath = 1;
constexpr int kExitInputError = 2;

struct ScenarioDeleter {
  void operator()(pp_scenario* s) const { pp_scenario_free(s); }
};
struct ResultDeleter {
  void operator()(pp_result* r) const { pp_result_free(r); }
};
using ScenarioPtr = std::unique_ptr<pp_scenario, ScenarioDeleter>;
using ResultPtr = std::unique_ptr<pp_result, ResultDeleter>;

int report(pp_status status) {
  std::fprintf(stderr, "error: %s: %s\n", pp_status_name(status),
               pp_last_error());
  return kExitInputError;
}

struct CommonArgs {
  std::string scenario_path;
  double tmax = 0.0;
  std::string nn_cost = "euclidean";
  std::string opt = "dijkstra";
  bool random_obstacle = false;
};

void add_common(CLI::App* cmd, CommonArgs* args, pp_plan_options* defaults) {
  args->tmax = defaults->tmax_s;
  cmd->add_option("--scenario", args->scenario_path, "Scenario file (JSON)")
      ->required();
  cmd->add_option("--tmax", args->tmax, "Planning time budget per run, seconds");
  cmd->add_option("--nn-cost", args->nn_cost,
                  "Nearest-neighbor cost: euclidean|rs|rs-flat")
      ->check(CLI::IsMember({"euclidean", "rs", "rs-flat"}));
  cmd->add_option("--opt", args->opt,
                  "Path optimization: none|smart|dijkstra")
      ->check(CLI::IsMember({"none", "smart", "dijkstra"}));
  cmd->add_flag("--random-obstacle", args->random_obstacle,
                "Drop a seeded random 0.5 m obstacle on the street");
}

void apply_common(const CommonArgs& args, pp_plan_options* options) {
  options->tmax_s = args.tmax;
  options->nn_cost = args.nn_cost == "rs"        ? PP_NN_REEDS_SHEPP
                     : args.nn_cost == "rs-flat" ? PP_NN_REEDS_SHEPP_FLAT
                                                 : PP_NN_EUCLIDEAN;
  options->opt = args.opt == "none"    ? PP_OPT_NONE
                 : args.opt == "smart" ? PP_OPT_SMART
                                       : PP_OPT_DIJKSTRA;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reeds-Shepp RRT* parking planner"};
  app.require_subcommand(1);

  pp_plan_options options;
  pp_plan_options_init(&options);

  CommonArgs plan_args;
  std::uint64_t seed = 1;
  std::uint64_t iterations = 0;
  std::string out_path;
  std::string svg_path;
  CLI::App* plan_cmd = app.add_subcommand("plan", "Run the planner once");
  add_common(plan_cmd, &plan_args, &options);
  plan_cmd->add_option("--seed", seed, "RNG seed");
  plan_cmd->add_option("--iters", iterations,
                       "Iteration cap (0 = time limit only)");
  plan_cmd->add_option("--out", out_path, "Write the result as JSON");
  plan_cmd->add_option("--svg", svg_path, "Render scenario, tree and paths");

  CommonArgs bench_args;
  std::uint32_t trials = 200;
  std::uint64_t seed0 = 1;
  std::uint32_t parallelism = 1;
  std::string csv_path;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Run a seeded trial campaign");
  add_common(bench_cmd, &bench_args, &options);
  bench_cmd->add_option("--trials", trials, "Number of seeded trials");
  bench_cmd->add_option("--seed0", seed0, "Seed of the first trial");
  bench_cmd->add_option("--parallelism", parallelism, "Worker threads");
  bench_cmd->add_option("--csv", csv_path, "Write the per-trial table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (plan_cmd->parsed()) {
    apply_common(plan_args, &options);
    options.seed = seed;
    options.max_iterations = iterations;

    pp_scenario* raw = nullptr;
    pp_status status = pp_scenario_load_file(plan_args.scenario_path.c_str(), &raw);
    if (status != PP_OK) return report(status);
    ScenarioPtr scenario(raw);
    if (plan_args.random_obstacle) {
      pp_scenario* derived = nullptr;
      status = pp_scenario_with_random_obstacle(scenario.get(), seed, &derived);
      if (status != PP_OK) return report(status);
      scenario.reset(derived);
    }

    pp_result* raw_result = nullptr;
    status = pp_plan_run(scenario.get(), &options, &raw_result);
    if (status != PP_OK) return report(status);
    ResultPtr result(raw_result);

    const bool found = pp_result_goal_found(result.get()) != 0;
    if (found) {
      std::printf("path found in %.3f s after %" PRIu64
                  " iterations; cost %.3f m (%.3f m before optimization)\n",
                  pp_result_seconds_to_first_path(result.get()),
                  pp_result_iterations(result.get()),
                  pp_result_post_opt_cost(result.get()),
                  pp_result_pre_opt_cost(result.get()));
    } else {
      std::printf("no path found within the budget (%" PRIu64 " iterations)\n",
                  pp_result_iterations(result.get()));
    }
    if (!out_path.empty()) {
      status = pp_result_write_json(result.get(), out_path.c_str());
      if (status != PP_OK) return report(status);
    }
    if (!svg_path.empty()) {
      status = pp_render_svg(scenario.get(), result.get(), svg_path.c_str());
      if (status != PP_OK) return report(status);
    }
    return found ? kExitOk : kExitNoPath;
  }

  apply_common(bench_args, &options);
  pp_scenario* raw = nullptr;
  pp_status status = pp_scenario_load_file(bench_args.scenario_path.c_str(), &raw);
  if (status != PP_OK) return report(status);
  ScenarioPtr scenario(raw);

  pp_bench_summary summary;
  status = pp_bench_run(scenario.get(), &options, trials, seed0, parallelism,
                        bench_args.random_obstacle ? 1 : 0,
                        csv_path.empty() ? nullptr : csv_path.c_str(),
                        &summary);
  if (status != PP_OK) return report(status);

  std::printf("trials: %u  successes: %u  success_rate: %.4f\n",
              summary.trials, summary.successes, summary.success_rate);
  std::printf("time_s    p50: %.6f  p95: %.6f\n", summary.time_p50,
              summary.time_p95);
  std::printf("pre_cost  p50: %.6f  p95: %.6f\n", summary.pre_cost_p50,
              summary.pre_cost_p95);
  std::printf("post_cost p50: %.6f  p95: %.6f\n", summary.post_cost_p50,
              summary.post_cost_p95);
  return kExitOk;
}
