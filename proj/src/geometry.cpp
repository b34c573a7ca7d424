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

#include "parkplan/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace parkplan {

double normalize_angle(double a) {
  double m = std::fmod(a, kTau);
  if (m < 0.0) m += kTau;
  if (m >= kTau) m = 0.0;  // fmod/rounding can land exactly on 2*pi
  return m;
}

double heading_diff(double a, double b) {
  const double d = normalize_angle(a - b);
  return std::min(d, kTau - d);
}

double euclidean_dist(const Pose& a, const Pose& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

namespace {

// Body rectangle in the pose frame: x along the heading, origin at the rear
// axle.
struct LocalBox {
  double xmin, xmax, ymin, ymax;
};

LocalBox body_box(const Car& car) {
  return {-car.rear_overhang(), car.front_extent(), -0.5 * car.width,
          0.5 * car.width};
}

Vec2 to_local(const Pose& pose, double wx, double wy) {
  const double c = std::cos(pose.theta);
  const double s = std::sin(pose.theta);
  const double dx = wx - pose.x;
  const double dy = wy - pose.y;
  return {c * dx + s * dy, -s * dx + c * dy};
}

bool box_hits_circle(const LocalBox& box, const Vec2& center, double r) {
  const double px = std::clamp(center.x, box.xmin, box.xmax);
  const double py = std::clamp(center.y, box.ymin, box.ymax);
  const double dx = center.x - px;
  const double dy = center.y - py;
  return dx * dx + dy * dy <= r * r;
}

// Liang-Barsky clip of segment a-b against the box; a nonempty clipped
// parameter range means the segment touches the solid rectangle.
bool box_hits_segment(const LocalBox& box, const Vec2& a, const Vec2& b) {
  double t0 = 0.0;
  double t1 = 1.0;
  const double d[2] = {b.x - a.x, b.y - a.y};
  const double lo[2] = {box.xmin, box.ymin};
  const double hi[2] = {box.xmax, box.ymax};
  const double p[2] = {a.x, a.y};
  for (int axis = 0; axis < 2; ++axis) {
    if (d[axis] == 0.0) {
      if (p[axis] < lo[axis] || p[axis] > hi[axis]) return false;
      continue;
    }
    double ta = (lo[axis] - p[axis]) / d[axis];
    double tb = (hi[axis] - p[axis]) / d[axis];
    if (ta > tb) std::swap(ta, tb);
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
    if (t0 > t1) return false;
  }
  return true;
}

}  // namespace

Footprint footprint(const Pose& pose, const Car& car) {
  const LocalBox box = body_box(car);
  const double c = std::cos(pose.theta);
  const double s = std::sin(pose.theta);
  const auto place = [&](double lx, double ly) -> Vec2 {
    return {pose.x + c * lx - s * ly, pose.y + s * lx + c * ly};
  };
  return {{place(box.xmin, box.ymin), place(box.xmax, box.ymin),
           place(box.xmax, box.ymax), place(box.xmin, box.ymax)}};
}

bool collide_pose(const Pose& pose, const Car& car, const ObstacleSet& obstacles) {
  const LocalBox box = body_box(car);
  for (const CircleObstacle& o : obstacles.circles) {
    const double dx = o.x - pose.x;
    const double dy = o.y - pose.y;
    if (dx * dx + dy * dy < o.r * o.r) return true;  // reference point inside
    if (box_hits_circle(box, to_local(pose, o.x, o.y), o.r)) return true;
  }
  for (const SegmentObstacle& o : obstacles.segments) {
    if (box_hits_segment(box, to_local(pose, o.x1, o.y1),
                         to_local(pose, o.x2, o.y2))) {
      return true;
    }
  }
  return false;
}

bool collide_path(std::span<const PathPoint> path, const Car& car,
                  const ObstacleSet& obstacles) {
  for (const PathPoint& p : path) {
    if (collide_pose(p.pose, car, obstacles)) return true;
  }
  return false;
}

}  // namespace parkplan
