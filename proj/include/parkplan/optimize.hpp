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

#ifndef PARKPLAN_OPTIMIZE_HPP_
#define PARKPLAN_OPTIMIZE_HPP_

#include <cstddef>

#include "parkplan/geometry.hpp"
#include "parkplan/reeds_shepp.hpp"

namespace parkplan {

enum class OptMode : std::uint8_t { None = 0, Smart = 1, Dijkstra = 2 };

/// Sum of Reeds-Shepp distances over consecutive poses.
double path_cost(const Path& path, double turning_radius);

/// Indices of the tip nodes of a path: the first pose, every cusp (a pose
/// whose arriving drive direction differs from the departing one; None tags
/// are ignored) and the last pose.
std::vector<std::size_t> find_tips(const Path& path);

struct OptResult {
  bool improved = false;
  Path path;
  double cost = 0.0;
};

/// Shortest tip-to-tip route by Dijkstra over the DAG of steered, collision
/// free connections between topologically ordered tips. Consecutive tips keep
/// their original path segment as a fallback edge, so the input remains
/// reachable; the input path is returned unchanged when no strictly better
/// route exists.
OptResult opt_path_dijkstra(const Path& path, const Car& car,
                            const ObstacleSet& obstacles,
                            double turning_radius, double step);

/// Greedy goal-to-init pruning pass: from each tip, splice to the earliest
/// tip with a collision-free steered connection. Never increases cost.
OptResult opt_path_smart(const Path& path, const Car& car,
                         const ObstacleSet& obstacles, double turning_radius,
                         double step);

}  // namespace parkplan

#endif  // PARKPLAN_OPTIMIZE_HPP_
