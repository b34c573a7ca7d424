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

#ifndef PARKPLAN_REEDS_SHEPP_HPP_
#define PARKPLAN_REEDS_SHEPP_HPP_

#include "parkplan/geometry.hpp"

namespace parkplan {

enum class RSSegKind : std::uint8_t { Left = 0, Straight = 1, Right = 2 };

/// One primitive of a Reeds-Shepp word: a circular arc at the minimum turning
/// radius or a straight, driven forward or in reverse. length is the arc
/// length in meters, always >= 0.
struct RSSegment {
  RSSegKind kind = RSSegKind::Straight;
  Direction dir = Direction::Forward;
  double length = 0.0;
};

/// Shortest curvature-bounded curve between two poses for a car that can
/// drive both ways. At most five segments; zero-length segments are dropped,
/// so an empty segment list means start == goal.
struct RSPath {
  Pose start;
  Pose goal;
  double turning_radius = 1.0;
  std::vector<RSSegment> segments;
  double total_length = 0.0;
};

/// Minimum-length Reeds-Shepp path among all canonical word families, with
/// curvature bound 1/turning_radius. Equal-length words resolve to the first
/// family in the fixed evaluation order.
RSPath rs_path(const Pose& a, const Pose& b, double turning_radius);

/// Arc length of rs_path(a, b, turning_radius) without building the segment
/// list.
double rs_distance(const Pose& a, const Pose& b, double turning_radius);

/// Poses along the curve at arc-length spacing <= step, always including the
/// start, every segment boundary and the final pose. Each pose is tagged with
/// the drive direction of the segment that reaches it.
Path rs_sample(const RSPath& path, double step);

/// rs_sample of the optimal curve from a to b.
Path steer(const Pose& a, const Pose& b, double turning_radius, double step);

/// Drive direction of the last segment of the optimal curve from a to b
/// (Forward when the curve is empty).
Direction rs_arrival_direction(const Pose& a, const Pose& b,
                               double turning_radius);

/// Sweeps the steered curve from a to b at the given pose spacing and reports
/// whether any sampled pose collides. Endpoints are included in the sweep.
bool edge_collides(const Pose& a, const Pose& b, double turning_radius,
                   double step, const Car& car, const ObstacleSet& obstacles);

}  // namespace parkplan

#endif  // PARKPLAN_REEDS_SHEPP_HPP_
