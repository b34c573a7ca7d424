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

#include "parkplan/optimize.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace parkplan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kCostEps = 1e-9;  // strictness slack for "better cost"

// Shared context for one optimization pass over a fixed tip sequence.
struct TipGraph {
  const Path& in;
  const Car& car;
  const ObstacleSet& obstacles;
  double radius;
  double step;
  std::vector<std::size_t> tips;
  std::vector<double> leg_cost;    // original-path cost between tips i, i+1
  std::vector<signed char> free_;  // steered feasibility cache, -1 unknown

  TipGraph(const Path& path, const Car& c, const ObstacleSet& obs, double r,
           double s)
      : in(path), car(c), obstacles(obs), radius(r), step(s),
        tips(find_tips(path)) {
    const std::size_t m = tips.size();
    free_.assign(m * m, -1);
    leg_cost.resize(m > 0 ? m - 1 : 0);
    for (std::size_t i = 0; i + 1 < m; ++i) {
      double c_leg = 0.0;
      for (std::size_t k = tips[i]; k < tips[i + 1]; ++k) {
        c_leg += rs_distance(in[k].pose, in[k + 1].pose, radius);
      }
      leg_cost[i] = c_leg;
    }
  }

  const Pose& tip_pose(std::size_t i) const { return in[tips[i]].pose; }

  bool steered_free(std::size_t i, std::size_t j) {
    signed char& f = free_[i * tips.size() + j];
    if (f < 0) {
      f = edge_collides(tip_pose(i), tip_pose(j), radius, step, car, obstacles)
              ? 0
              : 1;
    }
    return f == 1;
  }

  // Rebuilds the pose sequence for a chosen chain of tip indices. Steered
  // legs are resampled; fallback legs copy the original poses.
  Path build(const std::vector<std::size_t>& chain,
             const std::vector<bool>& steered) {
    Path out;
    out.push_back(in[tips[chain.front()]]);
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      const std::size_t i = chain[k];
      const std::size_t j = chain[k + 1];
      if (steered[k]) {
        Path leg = steer(tip_pose(i), tip_pose(j), radius, step);
        out.insert(out.end(), leg.begin() + 1, leg.end());
      } else {
        assert(j == i + 1);
        out.insert(out.end(), in.begin() + tips[i] + 1,
                   in.begin() + tips[j] + 1);
      }
    }
    return out;
  }
};

}  // namespace

double path_cost(const Path& path, double turning_radius) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    total += rs_distance(path[i].pose, path[i + 1].pose, turning_radius);
  }
  return total;
}

std::vector<std::size_t> find_tips(const Path& path) {
  std::vector<std::size_t> tips;
  if (path.empty()) return tips;
  tips.push_back(0);
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    const Direction a = path[i].dir;
    const Direction b = path[i + 1].dir;
    if (a != Direction::None && b != Direction::None && a != b) {
      tips.push_back(i);
    }
  }
  if (path.size() > 1) tips.push_back(path.size() - 1);
  return tips;
}

OptResult opt_path_dijkstra(const Path& path, const Car& car,
                            const ObstacleSet& obstacles,
                            double turning_radius, double step) {
  const double input_cost = path_cost(path, turning_radius);
  if (path.size() < 2) return {false, path, input_cost};

  TipGraph g(path, car, obstacles, turning_radius, step);
  const std::size_t m = g.tips.size();

  std::vector<double> ccost(m, kInf);
  std::vector<int> parent(m, -1);
  std::vector<bool> parent_steered(m, false);
  std::vector<bool> queued(m, false);
  std::vector<bool> popped(m, false);
  ccost[0] = 0.0;
  queued[0] = true;

  for (;;) {
    // Pop the queued tip with the lowest cumulative cost, lowest index first.
    std::size_t i = m;
    for (std::size_t k = 0; k < m; ++k) {
      if (queued[k] && !popped[k] && (i == m || ccost[k] < ccost[i])) i = k;
    }
    if (i == m || i == m - 1) break;
    popped[i] = true;
    for (std::size_t j = i + 1; j < m; ++j) {
      double w;
      bool steered;
      if (g.steered_free(i, j)) {
        w = rs_distance(g.tip_pose(i), g.tip_pose(j), turning_radius);
        steered = true;
      } else if (j == i + 1) {
        w = g.leg_cost[i];  // original path segment stays available
        steered = false;
      } else {
        continue;
      }
      const double c = ccost[i] + w;
      if (c < ccost[j]) {
        ccost[j] = c;
        parent[j] = static_cast<int>(i);
        parent_steered[j] = steered;
        queued[j] = true;
      }
    }
  }

  if (!(ccost[m - 1] < input_cost - kCostEps)) {
    return {false, path, input_cost};
  }

  std::vector<std::size_t> chain;
  std::vector<bool> steered;
  for (int i = static_cast<int>(m) - 1; i >= 0; i = parent[i]) {
    chain.push_back(static_cast<std::size_t>(i));
    if (i == 0) break;
    steered.push_back(parent_steered[i]);
  }
  std::reverse(chain.begin(), chain.end());
  std::reverse(steered.begin(), steered.end());
  Path out = g.build(chain, steered);
  return {true, out, path_cost(out, turning_radius)};
}

OptResult opt_path_smart(const Path& path, const Car& car,
                         const ObstacleSet& obstacles, double turning_radius,
                         double step) {
  const double input_cost = path_cost(path, turning_radius);
  if (path.size() < 2) return {false, path, input_cost};

  TipGraph g(path, car, obstacles, turning_radius, step);
  const std::size_t m = g.tips.size();

  std::vector<std::size_t> chain{m - 1};
  std::vector<bool> steered;
  std::size_t j = m - 1;
  while (j > 0) {
    std::size_t pick = j;  // sentinel: no steered splice found
    for (std::size_t i = 0; i < j; ++i) {
      if (g.steered_free(i, j)) {
        pick = i;
        break;
      }
    }
    if (pick == j) {
      chain.push_back(j - 1);
      steered.push_back(false);
      j = j - 1;
    } else {
      chain.push_back(pick);
      steered.push_back(true);
      j = pick;
    }
  }
  std::reverse(chain.begin(), chain.end());
  std::reverse(steered.begin(), steered.end());

  double cost = 0.0;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    cost += steered[k] ? rs_distance(g.tip_pose(chain[k]),
                                     g.tip_pose(chain[k + 1]), turning_radius)
                       : g.leg_cost[chain[k]];
  }
  if (!(cost < input_cost - kCostEps)) {
    return {false, path, input_cost};
  }
  Path out = g.build(chain, steered);
  return {true, out, path_cost(out, turning_radius)};
}

}  // namespace parkplan
