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

#include "parkplan/svg_render.hpp"

#include <cstdio>
#include <ostream>

namespace parkplan {

namespace {

constexpr double kPxPerMeter = 40.0;
constexpr double kMarginPx = 20.0;

struct Mapper {
  double x_min, y_max;

  double px(double x) const { return kMarginPx + (x - x_min) * kPxPerMeter; }
  // SVG y grows downward
  double py(double y) const { return kMarginPx + (y_max - y) * kPxPerMeter; }
};

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

void emit_polyline(std::ostream& out, const Mapper& m,
                   const std::vector<Vec2>& pts, const char* cls) {
  out << "<polyline class=\"" << cls << "\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0) out << ' ';
    out << coord(m.px(pts[i].x)) << ',' << coord(m.py(pts[i].y));
  }
  out << "\"/>\n";
}

std::vector<Vec2> path_polyline(const Path& path) {
  std::vector<Vec2> pts;
  pts.reserve(path.size());
  for (const PathPoint& p : path) pts.push_back({p.pose.x, p.pose.y});
  return pts;
}

// Open-front car frame: front-left, rear-left, rear-right, front-right.
std::vector<Vec2> u_frame(const Pose& pose, const Car& car) {
  const Footprint fp = footprint(pose, car);
  return {fp.corners[2], fp.corners[3], fp.corners[0], fp.corners[1]};
}

}  // namespace

void render_svg(std::ostream& out, const Scenario& scn, const Car& car,
                const std::vector<Node>* tree, const Path* pre_path,
                const Path* path) {
  const Mapper m{scn.x_min, scn.y_max};
  const double width = 2 * kMarginPx + (scn.x_max - scn.x_min) * kPxPerMeter;
  const double height = 2 * kMarginPx + (scn.y_max - scn.y_min) * kPxPerMeter;

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << coord(width)
      << "\" height=\"" << coord(height) << "\" viewBox=\"0 0 " << coord(width)
      << ' ' << coord(height) << "\">\n";
  out << "<defs>\n"
         "<pattern id=\"hatch\" width=\"6\" height=\"6\" "
         "patternTransform=\"rotate(45)\" patternUnits=\"userSpaceOnUse\">"
         "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#555\" "
         "stroke-width=\"1\"/></pattern>\n"
         "</defs>\n";
  out << "<style>\n"
         ".tree{fill:none;stroke:#bbb;stroke-width:1}\n"
         ".pre{fill:none;stroke:#f80;stroke-width:2}\n"
         ".opt{fill:none;stroke:#08f;stroke-width:2}\n"
         ".frame-init{fill:none;stroke:#2a7;stroke-width:2}\n"
         ".frame-goal{fill:none;stroke:#d33;stroke-width:2}\n"
         ".obstacle{fill:url(#hatch);stroke:#333;stroke-width:1.5}\n"
         ".wall{stroke:#333;stroke-width:1.5}\n"
         "</style>\n";

  for (const SegmentObstacle& s : scn.obstacles.segments) {
    out << "<line class=\"wall\" x1=\"" << coord(m.px(s.x1)) << "\" y1=\""
        << coord(m.py(s.y1)) << "\" x2=\"" << coord(m.px(s.x2)) << "\" y2=\""
        << coord(m.py(s.y2)) << "\"/>\n";
  }
  for (const CircleObstacle& c : scn.obstacles.circles) {
    out << "<circle class=\"obstacle\" cx=\"" << coord(m.px(c.x)) << "\" cy=\""
        << coord(m.py(c.y)) << "\" r=\"" << coord(c.r * kPxPerMeter)
        << "\"/>\n";
  }

  if (tree != nullptr) {
    for (std::size_t i = 1; i < tree->size(); ++i) {
      const Node& n = (*tree)[i];
      const Path edge = steer((*tree)[n.parent].pose, n.pose,
                              car.turning_radius, 0.2);
      emit_polyline(out, m, path_polyline(edge), "tree");
    }
  }
  if (pre_path != nullptr && pre_path->size() > 1) {
    emit_polyline(out, m, path_polyline(*pre_path), "pre");
  }
  if (path != nullptr && path->size() > 1) {
    emit_polyline(out, m, path_polyline(*path), "opt");
  }

  emit_polyline(out, m, u_frame(scn.init, car), "frame-init");
  emit_polyline(out, m, u_frame(scn.goal, car), "frame-goal");
  out << "</svg>\n";
}

}  // namespace parkplan
