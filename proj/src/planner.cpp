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

#include "parkplan/planner.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

namespace parkplan {

void validate_scenario(const Scenario& s, const Car& car) {
  if (!(car.length > car.wheelbase && car.wheelbase > 0.0))
    throw ScenarioError("invalid scenario: car must satisfy length > wheelbase > 0");
  if (!(car.width > 0.0))
    throw ScenarioError("invalid scenario: car width must be positive");
  if (!(car.turning_radius > 0.0))
    throw ScenarioError("invalid scenario: turning radius must be positive");
  if (!(s.x_min < s.x_max))
    throw ScenarioError("invalid scenario: x_min must be below x_max");
  if (!(s.y_min < s.y_max))
    throw ScenarioError("invalid scenario: y_min must be below y_max");
  const auto inside = [&](const Pose& p) {
    return p.x >= s.x_min && p.x <= s.x_max && p.y >= s.y_min && p.y <= s.y_max;
  };
  if (!inside(s.init))
    throw ScenarioError("invalid scenario: init pose outside bounds");
  if (!inside(s.goal))
    throw ScenarioError("invalid scenario: goal pose outside bounds");
  for (const CircleObstacle& c : s.obstacles.circles) {
    if (!(c.r > 0.0))
      throw ScenarioError("invalid scenario: circle radius must be positive");
  }
  for (const SegmentObstacle& o : s.obstacles.segments) {
    if (o.x1 == o.x2 && o.y1 == o.y2)
      throw ScenarioError("invalid scenario: segment endpoints must differ");
  }
  if (collide_pose(s.init, car, s.obstacles))
    throw ScenarioError("invalid scenario: init pose collides");
}

bool is_near(const Pose& a, const Pose& b, double gfdist, double gfangle) {
  return euclidean_dist(a, b) < gfdist &&
         heading_diff(a.theta, b.theta) < gfangle;
}

namespace {
inline double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}
}  // namespace

Pose random_sample(const Scenario& s, std::mt19937_64& rng) {
  const double x = s.x_min + (s.x_max - s.x_min) * unit_draw(rng);
  const double y = s.y_min + (s.y_max - s.y_min) * unit_draw(rng);
  const double theta = kTau * unit_draw(rng);
  return {x, y, theta};
}

Planner::Planner(const Scenario& scenario, const Car& car,
                 const PlannerConfig& cfg)
    : scn_(scenario),
      car_(car),
      cfg_(cfg),
      index_(NNConfig{cfg.nn_iystep, scenario.y_min, scenario.y_max,
                      cfg.nn_cost}),
      rng_(cfg.rng_seed),
      t0_(std::chrono::steady_clock::now()) {
  nodes_.reserve(4096);
  nodes_.push_back(Node{scenario.init, -1, {}, 0.0, Direction::None});
  index_.add(scenario.init, 0);
  if (is_near(scenario.init, scenario.goal, cfg_.gfdist, cfg_.gfangle)) {
    note_goal(0);
  }
}

double Planner::elapsed() const {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_)
      .count();
}

void Planner::note_goal(std::int32_t id) {
  if (goal_node_ < 0) {
    goal_node_ = id;
    seconds_to_goal_ = elapsed();
  }
}

std::vector<std::uint32_t> Planner::near_set(const Pose& pose) const {
  return index_.near_nodes(pose, cfg_.near_dist, car_.turning_radius);
}

std::int32_t Planner::add_child(std::int32_t parent, const Pose& pose,
                                Direction dir, double edge_cost) {
  const auto id = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back(Node{pose, parent, {}, nodes_[parent].ccost + edge_cost,
                        dir});
  nodes_[parent].children.push_back(id);
  index_.add(pose, static_cast<std::uint32_t>(id));
  return id;
}

std::int32_t Planner::try_connect(const Pose& pose,
                                  const std::vector<std::uint32_t>& nns) {
  if (nns.empty()) return -1;
  // Walk candidates by the Euclidean lower bound of their resulting cost;
  // the optimal Reeds-Shepp connection is never shorter than the straight
  // line, so the scan can stop as soon as the bound passes the best feasible
  // candidate found. This keeps the argmin exact while skipping most curve
  // solves and collision sweeps.
  nns_dist_.assign(nns.size(), -1.0);
  order_.resize(nns.size());
  lower_.resize(nns.size());
  for (std::size_t i = 0; i < nns.size(); ++i) {
    lower_[i] =
        nodes_[nns[i]].ccost + euclidean_dist(nodes_[nns[i]].pose, pose);
    order_[i] = static_cast<std::uint32_t>(i);
  }
  std::sort(order_.begin(), order_.end(),
            [&](std::uint32_t a, std::uint32_t b) {
              if (lower_[a] != lower_[b]) return lower_[a] < lower_[b];
              return nns[a] < nns[b];
            });
  double best_key = std::numeric_limits<double>::infinity();
  double best_dist = 0.0;
  std::int32_t best = -1;
  for (const std::uint32_t i : order_) {
    if (lower_[i] >= best_key) break;
    const std::int32_t cand = static_cast<std::int32_t>(nns[i]);
    const double dist =
        rs_distance(nodes_[cand].pose, pose, car_.turning_radius);
    nns_dist_[i] = dist;
    const double key = nodes_[cand].ccost + dist;
    if (key >= best_key) continue;
    if (edge_collides(nodes_[cand].pose, pose, car_.turning_radius,
                      cfg_.steer_step, car_, scn_.obstacles)) {
      continue;
    }
    best_key = key;
    best_dist = dist;
    best = cand;
  }
  if (best < 0) return -1;
  const Direction dir =
      rs_arrival_direction(nodes_[best].pose, pose, car_.turning_radius);
  return add_child(best, pose, dir, best_dist);
}

void Planner::rewire(std::int32_t ns, const std::vector<std::uint32_t>& nns) {
  nns_dist_.assign(nns.size(), -1.0);
  rewire_with_dists(ns, nns, nns_dist_);
}

// Distances may arrive precomputed from try_connect (the metric is
// symmetric); entries below zero are evaluated on demand, and only for
// candidates whose Euclidean bound still allows an improvement.
void Planner::rewire_with_dists(std::int32_t ns,
                                const std::vector<std::uint32_t>& nns,
                                const std::vector<double>& dists) {
  for (std::size_t i = 0; i < nns.size(); ++i) {
    const auto id = static_cast<std::int32_t>(nns[i]);
    if (id == ns) continue;
    double dist = dists[i];
    if (dist < 0.0) {
      const double bound =
          nodes_[ns].ccost +
          euclidean_dist(nodes_[ns].pose, nodes_[id].pose);
      if (!(bound < nodes_[id].ccost)) continue;
      dist = rs_distance(nodes_[ns].pose, nodes_[id].pose,
                         car_.turning_radius);
    }
    const double cand_cost = nodes_[ns].ccost + dist;
    if (!(cand_cost < nodes_[id].ccost)) continue;
    if (edge_collides(nodes_[ns].pose, nodes_[id].pose, car_.turning_radius,
                      cfg_.steer_step, car_, scn_.obstacles)) {
      continue;
    }
    Node& n = nodes_[id];
    auto& siblings = nodes_[n.parent].children;
    siblings.erase(std::find(siblings.begin(), siblings.end(), id));
    n.parent = ns;
    n.dir = rs_arrival_direction(nodes_[ns].pose, n.pose, car_.turning_radius);
    nodes_[ns].children.push_back(id);
    const double delta = cand_cost - n.ccost;
    // propagate the decrease through the whole subtree
    std::vector<std::int32_t> stack{id};
    while (!stack.empty()) {
      const std::int32_t k = stack.back();
      stack.pop_back();
      nodes_[k].ccost += delta;
      stack.insert(stack.end(), nodes_[k].children.begin(),
                   nodes_[k].children.end());
    }
  }
}

void Planner::step() {
  ++iterations_;
  const Pose sample = random_sample(scn_, rng_);
  const std::uint32_t nearest =
      index_.nearest_with_cost(sample, car_.turning_radius);

  std::uint32_t pn = nearest;
  new_nodes_.clear();
  const Path chain = steer(nodes_[nearest].pose, sample, car_.turning_radius,
                           cfg_.node_spacing);
  for (std::size_t k = 1; k < chain.size(); ++k) {
    nns_ = near_set(chain[k].pose);
    const auto it = std::lower_bound(nns_.begin(), nns_.end(), pn);
    if (it == nns_.end() || *it != pn) nns_.insert(it, pn);
    const std::int32_t ns = try_connect(chain[k].pose, nns_);
    if (ns < 0) break;  // chain is cut at the first failed connect
    rewire_with_dists(ns, nns_, nns_dist_);
    new_nodes_.push_back(ns);
    if (is_near(nodes_[ns].pose, scn_.goal, cfg_.gfdist, cfg_.gfangle)) {
      note_goal(ns);
      if (!cfg_.continue_after_goal) return;
    }
    pn = static_cast<std::uint32_t>(ns);
  }

  // Expansion toward the goal from every node added this iteration; chain
  // nodes are appended directly, without connect/rewire.
  for (const std::int32_t na : new_nodes_) {
    std::int32_t pnode = na;
    const Path gchain = steer(nodes_[na].pose, scn_.goal, car_.turning_radius,
                              cfg_.node_spacing);
    for (std::size_t k = 1; k < gchain.size(); ++k) {
      const Pose& next = gchain[k].pose;
      if (edge_collides(nodes_[pnode].pose, next, car_.turning_radius,
                        cfg_.steer_step, car_, scn_.obstacles)) {
        break;
      }
      const double edge_cost =
          rs_distance(nodes_[pnode].pose, next, car_.turning_radius);
      const std::int32_t ns = add_child(pnode, next, gchain[k].dir, edge_cost);
      if (is_near(nodes_[ns].pose, scn_.goal, cfg_.gfdist, cfg_.gfangle)) {
        note_goal(ns);
        if (!cfg_.continue_after_goal) return;
      }
      pnode = ns;
    }
  }
}

Path Planner::tree_path(std::int32_t node) const {
  Path out;
  for (std::int32_t i = node; i >= 0; i = nodes_[i].parent) {
    out.push_back({nodes_[i].pose, nodes_[i].dir});
  }
  std::reverse(out.begin(), out.end());
  return out;
}

PlanResult plan(const Scenario& scenario, const Car& car,
                const PlannerConfig& cfg, std::vector<Node>* tree_out) {
  validate_scenario(scenario, car);
  Planner planner(scenario, car, cfg);

  while (!(planner.goal_found() && !cfg.continue_after_goal)) {
    if (cfg.max_iterations != 0 && planner.iterations() >= cfg.max_iterations)
      break;
    if (cfg.tmax > 0.0 && planner.elapsed() >= cfg.tmax) break;
    planner.step();
  }

  PlanResult result;
  result.iterations = planner.iterations();
  result.goal_found = planner.goal_found();
  if (result.goal_found) {
    result.elapsed_to_first_path = planner.seconds_to_first_goal();
    result.pre_path = planner.tree_path(planner.goal_node());
    result.pre_opt_cost = path_cost(result.pre_path, car.turning_radius);
    switch (cfg.opt) {
      case OptMode::None:
        result.path = result.pre_path;
        result.post_opt_cost = result.pre_opt_cost;
        break;
      case OptMode::Smart: {
        OptResult opt = opt_path_smart(result.pre_path, car,
                                       scenario.obstacles, car.turning_radius,
                                       cfg.steer_step);
        result.path = std::move(opt.path);
        result.post_opt_cost = opt.improved ? opt.cost : result.pre_opt_cost;
        break;
      }
      case OptMode::Dijkstra: {
        OptResult opt = opt_path_dijkstra(result.pre_path, car,
                                          scenario.obstacles,
                                          car.turning_radius, cfg.steer_step);
        result.path = std::move(opt.path);
        result.post_opt_cost = opt.improved ? opt.cost : result.pre_opt_cost;
        break;
      }
    }
  }
  if (tree_out != nullptr) *tree_out = planner.nodes();
  return result;
}

}  // namespace parkplan
