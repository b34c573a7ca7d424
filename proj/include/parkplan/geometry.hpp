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

#ifndef PARKPLAN_GEOMETRY_HPP_
#define PARKPLAN_GEOMETRY_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace parkplan {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTau = 2.0 * kPi;

/// Maps an angle to [0, 2*pi).
double normalize_angle(double a);

/// Circular distance between two headings, in [0, pi].
double heading_diff(double a, double b);

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// Planar configuration of the car: position of the rear-axle midpoint and
/// heading. The constructor normalizes theta to [0, 2*pi).
struct Pose {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;

  Pose() = default;
  Pose(double px, double py, double heading)
      : x(px), y(py), theta(normalize_angle(heading)) {}
};

enum class Direction : std::uint8_t { None = 0, Forward = 1, Backward = 2 };

struct PathPoint {
  Pose pose;
  Direction dir = Direction::None;
};

/// A path is a pose sequence; each pose carries the drive direction of the
/// motion arriving at it.
using Path = std::vector<PathPoint>;

struct CircleObstacle {
  double x = 0.0;
  double y = 0.0;
  double r = 0.0;
};

struct SegmentObstacle {
  double x1 = 0.0;
  double y1 = 0.0;
  double x2 = 0.0;
  double y2 = 0.0;
};

struct ObstacleSet {
  std::vector<CircleObstacle> circles;
  std::vector<SegmentObstacle> segments;
};

/// Vehicle dimensions and kinematic limit. The body overhangs the wheelbase
/// equally at both ends: (length - wheelbase)/2 behind the rear axle and the
/// same amount beyond the front axle.
struct Car {
  double length = 0.0;
  double width = 0.0;
  double turning_radius = 0.0;
  double wheelbase = 0.0;

  double curvature() const { return 1.0 / turning_radius; }
  double rear_overhang() const { return 0.5 * (length - wheelbase); }
  /// Distance from the rear axle to the front bumper.
  double front_extent() const { return 0.5 * (length + wheelbase); }
};

/// Oriented body rectangle. Corners are ordered rear-right, front-right,
/// front-left, rear-left (counterclockwise for heading 0).
struct Footprint {
  std::array<Vec2, 4> corners;
};

Footprint footprint(const Pose& pose, const Car& car);

/// True iff the body rectangle touches any obstacle, or the rear-axle
/// reference point lies strictly inside a circle obstacle.
bool collide_pose(const Pose& pose, const Car& car, const ObstacleSet& obstacles);

/// True iff any pose of the path collides.
bool collide_path(std::span<const PathPoint> path, const Car& car,
                  const ObstacleSet& obstacles);

/// Planar distance between pose positions; headings are ignored.
double euclidean_dist(const Pose& a, const Pose& b);

}  // namespace parkplan

#endif  // PARKPLAN_GEOMETRY_HPP_
