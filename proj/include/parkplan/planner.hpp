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

#ifndef PARKPLAN_PLANNER_HPP_
#define PARKPLAN_PLANNER_HPP_

#include <chrono>
#include <random>
#include <stdexcept>

#include "parkplan/nn_index.hpp"
#include "parkplan/optimize.hpp"

namespace parkplan {

struct Scenario {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;
  Pose init;
  Pose goal;
  ObstacleSet obstacles;
};

class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws ScenarioError naming the violated invariant.
void validate_scenario(const Scenario& scenario, const Car& car);

struct PlannerConfig {
  double tmax = 10.0;            // seconds; <= 0 disables the time limit
  double gfdist = 0.05;          // goal-found position tolerance, meters
  double gfangle = kPi / 32.0;   // goal-found heading tolerance, radians
  double near_dist = 3.0;        // NearNodes radius, meters
  double steer_step = 0.2;       // collision-sweep pose spacing, meters
  double node_spacing = 1.5;     // tree-node spacing along steered chains
  double nn_iystep = 1.0;        // NN index bucket height, meters
  std::uint64_t rng_seed = 1;
  NNCostMode nn_cost = NNCostMode::Euclidean;
  OptMode opt = OptMode::Dijkstra;
  std::uint64_t max_iterations = 0;  // 0 = no iteration cap
  bool continue_after_goal = false;  // diagnostics: keep growing the tree
};

struct Node {
  Pose pose;
  std::int32_t parent = -1;
  std::vector<std::int32_t> children;
  double ccost = 0.0;  // cumulative Reeds-Shepp cost from the root
  Direction dir = Direction::None;  // drive direction of the arriving edge
};

struct PlanResult {
  bool goal_found = false;
  Path path;       // init -> goal after optimization (empty on failure)
  Path pre_path;   // raw tree path before optimization
  double pre_opt_cost = 0.0;
  double post_opt_cost = 0.0;
  double elapsed_to_first_path = 0.0;  // seconds
  std::uint64_t iterations = 0;
};

/// True iff the poses are within gfdist (planar) and gfangle (circular
/// heading difference) of each other.
bool is_near(const Pose& a, const Pose& b, double gfdist, double gfangle);

/// Uniform pose sampler over the scenario bounds. Draws x, then y, then
/// theta; deterministic for a given engine state.
Pose random_sample(const Scenario& scenario, std::mt19937_64& rng);

/// One search tree plus the incremental state of the sampling loop. step()
/// runs a single iteration: sample, expand toward it with connect/rewire,
/// then steer every node added this iteration toward the goal.
///
/// Instances are single-threaded; run one planner per thread.
class Planner {
 public:
  Planner(const Scenario& scenario, const Car& car, const PlannerConfig& cfg);

  void step();

  bool goal_found() const { return goal_node_ >= 0; }
  std::int32_t goal_node() const { return goal_node_; }
  std::uint64_t iterations() const { return iterations_; }
  double elapsed() const;
  double seconds_to_first_goal() const { return seconds_to_goal_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const NNIndex& index() const { return index_; }

  /// Root-to-node pose sequence with arriving directions.
  Path tree_path(std::int32_t node) const;

  /// Links a new node at `pose` to the best parent among `nns` (lowest
  /// resulting cumulative cost, earliest id on ties, collision-free steered
  /// connection required). Returns the new node id or -1.
  std::int32_t try_connect(const Pose& pose,
                           const std::vector<std::uint32_t>& nns);

  /// Re-parents any node of `nns` that is cheaper to reach through `ns`,
  /// propagating the cost decrease through its subtree.
  void rewire(std::int32_t ns, const std::vector<std::uint32_t>& nns);


  /// Nodes whose configured cost to `pose` is below the near radius.
  std::vector<std::uint32_t> near_set(const Pose& pose) const;

 private:
  std::int32_t add_child(std::int32_t parent, const Pose& pose, Direction dir,
                         double edge_cost);
  void rewire_with_dists(std::int32_t ns, const std::vector<std::uint32_t>& nns,
                         const std::vector<double>& dists);
  void note_goal(std::int32_t id);

  const Scenario& scn_;
  const Car& car_;
  PlannerConfig cfg_;
  std::vector<Node> nodes_;
  NNIndex index_;
  std::mt19937_64 rng_;
  std::chrono::steady_clock::time_point t0_;
  std::int32_t goal_node_ = -1;
  double seconds_to_goal_ = 0.0;
  std::uint64_t iterations_ = 0;
  // scratch, reused across iterations
  std::vector<std::uint32_t> nns_;
  std::vector<double> nns_dist_;
  std::vector<double> lower_;
  std::vector<std::uint32_t> order_;
  std::vector<std::int32_t> new_nodes_;
};

/// Runs the search loop until the goal is found, the time budget expires or
/// the iteration cap is hit, then applies the configured optimizer. The tree
/// can be captured through tree_out (e.g. for rendering).
PlanResult plan(const Scenario& scenario, const Car& car,
                const PlannerConfig& cfg, std::vector<Node>* tree_out = nullptr);

}  // namespace parkplan

#endif  // PARKPLAN_PLANNER_HPP_
