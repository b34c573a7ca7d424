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

#include "parkplan.h"

#include <fstream>
#include <string>

#include <json.hpp>

#include "parkplan/bench.hpp"
#include "parkplan/scenario_io.hpp"
#include "parkplan/svg_render.hpp"

struct pp_scenario {
  parkplan::Scenario scenario;
  parkplan::Car car;
};

struct pp_result {
  parkplan::PlanResult result;
  std::vector<parkplan::Node> tree;
  parkplan::Car car;
};

namespace {

thread_local std::string g_last_error;

pp_status fail(pp_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
pp_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const parkplan::ParseError& e) {
    return fail(PP_ERR_PARSE, e.what());
  } catch (const parkplan::ScenarioError& e) {
    return fail(PP_ERR_INVALID_SCENARIO, e.what());
  } catch (const std::exception& e) {
    return fail(PP_ERR_INTERNAL, e.what());
  }
}

parkplan::PlannerConfig to_config(const pp_plan_options& o) {
  parkplan::PlannerConfig cfg;
  cfg.tmax = o.tmax_s;
  cfg.gfdist = o.gfdist;
  cfg.gfangle = o.gfangle;
  cfg.near_dist = o.near_dist;
  cfg.steer_step = o.steer_step;
  cfg.nn_iystep = o.nn_iystep;
  cfg.rng_seed = o.seed;
  cfg.max_iterations = o.max_iterations;
  cfg.nn_cost = static_cast<parkplan::NNCostMode>(o.nn_cost);
  cfg.opt = static_cast<parkplan::OptMode>(o.opt);
  return cfg;
}

nlohmann::json path_json(const parkplan::Path& path) {
  nlohmann::json arr = nlohmann::json::array();
  for (const parkplan::PathPoint& p : path) {
    arr.push_back({{"x", p.pose.x},
                   {"y", p.pose.y},
                   {"theta", p.pose.theta},
                   {"dir", static_cast<int>(p.dir)}});
  }
  return arr;
}

}  // namespace

extern "C" {

const char* pp_version(void) { return "1.0.0"; }

const char* pp_status_name(pp_status status) {
  switch (status) {
    case PP_OK: return "ok";
    case PP_ERR_IO: return "io error";
    case PP_ERR_PARSE: return "parse error";
    case PP_ERR_INVALID_SCENARIO: return "invalid scenario";
    case PP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PP_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* pp_last_error(void) { return g_last_error.c_str(); }

void pp_plan_options_init(pp_plan_options* options) {
  if (options == nullptr) return;
  const parkplan::PlannerConfig defaults;
  options->tmax_s = defaults.tmax;
  options->gfdist = defaults.gfdist;
  options->gfangle = defaults.gfangle;
  options->near_dist = defaults.near_dist;
  options->steer_step = defaults.steer_step;
  options->nn_iystep = defaults.nn_iystep;
  options->seed = defaults.rng_seed;
  options->max_iterations = defaults.max_iterations;
  options->nn_cost = PP_NN_EUCLIDEAN;
  options->opt = PP_OPT_DIJKSTRA;
}

pp_status pp_scenario_load_file(const char* path, pp_scenario** out) {
  if (path == nullptr || out == nullptr)
    return fail(PP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto loaded = parkplan::load_scenario_file(path);
    *out = new pp_scenario{std::move(loaded.scenario), loaded.car};
    return PP_OK;
  });
}

pp_status pp_scenario_load_text(const char* json_text, pp_scenario** out) {
  if (json_text == nullptr || out == nullptr)
    return fail(PP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto loaded = parkplan::load_scenario_text(json_text);
    *out = new pp_scenario{std::move(loaded.scenario), loaded.car};
    return PP_OK;
  });
}

pp_status pp_scenario_with_random_obstacle(const pp_scenario* base,
                                           uint64_t seed, pp_scenario** out) {
  if (base == nullptr || out == nullptr)
    return fail(PP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::mt19937_64 rng(seed);
    *out = new pp_scenario{
        parkplan::make_obstacle_scenario(base->scenario, base->car, rng),
        base->car};
    return PP_OK;
  });
}

void pp_scenario_free(pp_scenario* scenario) { delete scenario; }

pp_status pp_plan_run(const pp_scenario* scenario,
                      const pp_plan_options* options, pp_result** out) {
  if (scenario == nullptr || options == nullptr || out == nullptr)
    return fail(PP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto result = std::make_unique<pp_result>();
    result->car = scenario->car;
    result->result = parkplan::plan(scenario->scenario, scenario->car,
                                    to_config(*options), &result->tree);
    *out = result.release();
    return PP_OK;
  });
}

void pp_result_free(pp_result* result) { delete result; }

int pp_result_goal_found(const pp_result* r) {
  return (r != nullptr && r->result.goal_found) ? 1 : 0;
}

double pp_result_pre_opt_cost(const pp_result* r) {
  return r == nullptr ? 0.0 : r->result.pre_opt_cost;
}

double pp_result_post_opt_cost(const pp_result* r) {
  return r == nullptr ? 0.0 : r->result.post_opt_cost;
}

double pp_result_seconds_to_first_path(const pp_result* r) {
  return r == nullptr ? 0.0 : r->result.elapsed_to_first_path;
}

uint64_t pp_result_iterations(const pp_result* r) {
  return r == nullptr ? 0 : r->result.iterations;
}

size_t pp_result_path_size(const pp_result* r) {
  return r == nullptr ? 0 : r->result.path.size();
}

pp_status pp_result_path_point(const pp_result* r, size_t index,
                               pp_path_point* out) {
  if (r == nullptr || out == nullptr)
    return fail(PP_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= r->result.path.size())
    return fail(PP_ERR_INVALID_ARGUMENT, "path index out of range");
  const parkplan::PathPoint& p = r->result.path[index];
  out->x = p.pose.x;
  out->y = p.pose.y;
  out->theta = p.pose.theta;
  out->dir = static_cast<pp_drive_dir>(p.dir);
  return PP_OK;
}

pp_status pp_result_write_json(const pp_result* r, const char* path) {
  if (r == nullptr || path == nullptr)
    return fail(PP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    nlohmann::json doc;
    doc["goal_found"] = r->result.goal_found;
    doc["pre_opt_cost"] = r->result.pre_opt_cost;
    doc["post_opt_cost"] = r->result.post_opt_cost;
    doc["seconds_to_first_path"] = r->result.elapsed_to_first_path;
    doc["iterations"] = r->result.iterations;
    doc["path"] = path_json(r->result.path);
    doc["pre_path"] = path_json(r->result.pre_path);
    std::ofstream out(path, std::ios::binary);
    if (!out) return fail(PP_ERR_IO, std::string("cannot write ") + path);
    out << doc.dump(2) << '\n';
    return PP_OK;
  });
}

pp_status pp_bench_run(const pp_scenario* scenario,
                       const pp_plan_options* options, uint32_t n_trials,
                       uint64_t seed0, uint32_t parallelism,
                       int random_obstacle, const char* csv_path,
                       pp_bench_summary* summary) {
  if (scenario == nullptr || options == nullptr)
    return fail(PP_ERR_INVALID_ARGUMENT, "null argument");
  if (n_trials == 0)
    return fail(PP_ERR_INVALID_ARGUMENT, "n_trials must be >= 1");
  return guarded([&] {
    parkplan::BenchOptions bench;
    bench.n_trials = n_trials;
    bench.seed0 = seed0;
    bench.parallelism = parallelism;
    bench.random_obstacle = random_obstacle != 0;
    const auto records = parkplan::run_trials(
        scenario->scenario, scenario->car, to_config(*options), bench);
    if (csv_path != nullptr) {
      std::ofstream out(csv_path, std::ios::binary);
      if (!out) return fail(PP_ERR_IO, std::string("cannot write ") + csv_path);
      parkplan::write_csv(out, records);
    }
    if (summary != nullptr) {
      const parkplan::BenchSummary s = parkplan::summarize(records);
      summary->trials = s.trials;
      summary->successes = s.successes;
      summary->success_rate = s.success_rate;
      summary->time_p50 = s.time_p50;
      summary->time_p95 = s.time_p95;
      summary->pre_cost_p50 = s.pre_p50;
      summary->pre_cost_p95 = s.pre_p95;
      summary->post_cost_p50 = s.post_p50;
      summary->post_cost_p95 = s.post_p95;
    }
    return PP_OK;
  });
}

pp_status pp_render_svg(const pp_scenario* scenario, const pp_result* result,
                        const char* out_path) {
  if (scenario == nullptr || out_path == nullptr)
    return fail(PP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) return fail(PP_ERR_IO, std::string("cannot write ") + out_path);
    const std::vector<parkplan::Node>* tree = nullptr;
    const parkplan::Path* pre = nullptr;
    const parkplan::Path* post = nullptr;
    if (result != nullptr) {
      tree = &result->tree;
      if (result->result.goal_found) {
        pre = &result->result.pre_path;
        post = &result->result.path;
      }
    }
    parkplan::render_svg(out, scenario->scenario, scenario->car, tree, pre,
                         post);
    return PP_OK;
  });
}

}  // extern "C"
