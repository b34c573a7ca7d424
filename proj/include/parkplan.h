/* Copyright 2026 The parkplan Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the parkplan motion-planning library. All objects are
 * opaque handles owned by the library; every fallible call returns a
 * pp_status and leaves a human-readable detail in pp_last_error() (thread
 * local) on failure. */

#ifndef PARKPLAN_H
#define PARKPLAN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pp_status {
  PP_OK = 0,
  PP_ERR_IO = 1,               /* file cannot be read or written */
  PP_ERR_PARSE = 2,            /* malformed scenario document */
  PP_ERR_INVALID_SCENARIO = 3, /* scenario invariant violated */
  PP_ERR_INVALID_ARGUMENT = 4,
  PP_ERR_INTERNAL = 5
} pp_status;

typedef enum pp_nn_cost {
  PP_NN_EUCLIDEAN = 0,
  PP_NN_REEDS_SHEPP = 1,
  PP_NN_REEDS_SHEPP_FLAT = 2
} pp_nn_cost;

typedef enum pp_opt_mode {
  PP_OPT_NONE = 0,
  PP_OPT_SMART = 1,
  PP_OPT_DIJKSTRA = 2
} pp_opt_mode;

typedef enum pp_drive_dir {
  PP_DIR_NONE = 0,
  PP_DIR_FORWARD = 1,
  PP_DIR_BACKWARD = 2
} pp_drive_dir;

typedef struct pp_scenario pp_scenario;
typedef struct pp_result pp_result;

typedef struct pp_plan_options {
  double tmax_s;        /* planning budget; <= 0 disables the limit */
  double gfdist;        /* goal position tolerance, meters */
  double gfangle;       /* goal heading tolerance, radians */
  double near_dist;     /* rewiring neighborhood radius, meters */
  double steer_step;    /* steering sample spacing, meters */
  double nn_iystep;     /* nearest-neighbor bucket height, meters */
  uint64_t seed;
  uint64_t max_iterations; /* 0 = no iteration cap */
  pp_nn_cost nn_cost;
  pp_opt_mode opt;
} pp_plan_options;

typedef struct pp_path_point {
  double x, y, theta;
  pp_drive_dir dir;
} pp_path_point;

typedef struct pp_bench_summary {
  uint32_t trials;
  uint32_t successes;
  double success_rate;
  double time_p50, time_p95;
  double pre_cost_p50, pre_cost_p95;
  double post_cost_p50, post_cost_p95;
} pp_bench_summary;

const char* pp_version(void);
const char* pp_status_name(pp_status status);
/* Detail message of the last failing call on this thread. */
const char* pp_last_error(void);

/* Fills in the default planning options. */
void pp_plan_options_init(pp_plan_options* options);

pp_status pp_scenario_load_file(const char* path, pp_scenario** out);
pp_status pp_scenario_load_text(const char* json_text, pp_scenario** out);
/* Copy of `base` with one extra random 0.5 m circle obstacle on the street
 * near the slot; the placement is a pure function of the seed. */
pp_status pp_scenario_with_random_obstacle(const pp_scenario* base,
                                           uint64_t seed, pp_scenario** out);
void pp_scenario_free(pp_scenario* scenario);

pp_status pp_plan_run(const pp_scenario* scenario,
                      const pp_plan_options* options, pp_result** out);
void pp_result_free(pp_result* result);

int pp_result_goal_found(const pp_result* result);
double pp_result_pre_opt_cost(const pp_result* result);
double pp_result_post_opt_cost(const pp_result* result);
double pp_result_seconds_to_first_path(const pp_result* result);
uint64_t pp_result_iterations(const pp_result* result);
size_t pp_result_path_size(const pp_result* result);
pp_status pp_result_path_point(const pp_result* result, size_t index,
                               pp_path_point* out);
/* Writes the result (costs, timings, both pose sequences) as JSON. */
pp_status pp_result_write_json(const pp_result* result, const char* path);

/* Runs n_trials seeded plans (seeds seed0 .. seed0+n_trials-1) on a worker
 * pool. When csv_path is non-NULL the per-trial table is written there;
 * summary may be NULL. */
pp_status pp_bench_run(const pp_scenario* scenario,
                       const pp_plan_options* options, uint32_t n_trials,
                       uint64_t seed0, uint32_t parallelism,
                       int random_obstacle, const char* csv_path,
                       pp_bench_summary* summary);

/* Renders the scenario and, when result is non-NULL, its search tree and
 * paths. */
pp_status pp_render_svg(const pp_scenario* scenario, const pp_result* result,
                        const char* out_path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PARKPLAN_H */
